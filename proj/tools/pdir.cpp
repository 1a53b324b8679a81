#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "harness/config.hpp"
#include "harness/report.hpp"
#include "harness/suites.hpp"

namespace {

using namespace pdir::harness;

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out = "pdir_out";
    std::string format = "json";
    std::string baseline;
    bool freeze = false;
};

int run(const std::string& command, const Options& opt) {
    Config cfg = opt.config.empty() ? Config{} : load_config(opt.config);
    if (opt.seed) cfg.seed = *opt.seed;
    const Format fmt = parse_format(opt.format);

    Calibration cal;
    if (!opt.baseline.empty() && std::filesystem::exists(opt.baseline)) cal = Calibration::load(opt.baseline);
    else if (!opt.baseline.empty() && !opt.freeze) throw pdir::UsageError("baseline " + opt.baseline + " does not exist");
    if (opt.freeze && opt.baseline.empty()) throw pdir::UsageError("--freeze-baseline needs --baseline <path>");
    cal.set_freeze(opt.freeze);

    std::vector<std::string> suites;
    if (command == "all") suites = cfg.suites;
    else suites = {command};
    VerificationReport report = run_report(cfg, suites, cal, command);
    write_report(report, opt.out, fmt);
    if (opt.freeze) cal.save(opt.baseline);

    std::size_t failed = 0;
    for (const auto& c : report.checks())
        if (!c.pass) {
            ++failed;
            std::cerr << "FAIL " << c.name << '\n';
        }
    std::cout << report.checks().size() - failed << '/' << report.checks().size() << " checks passed, report in "
              << opt.out << '\n';
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for the first-order parabolic boundary value toolkit"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;
    std::string command;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"calculus", "symbol, projector and half-derivative identities"},
        {"layers", "layer potentials, jump relations, Dirichlet-to-Neumann maps"},
        {"energy", "coercive slab form and its solver"},
        {"kato", "dense square root of the parabolic operator"},
        {"estimates", "square function, non-tangential, reverse Hoelder and Rellich measurements"},
        {"diagnostics", "invertibility of the boundary block operators"},
        {"all", "every suite listed in the config"}};
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", opt.config, "JSON config file")->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "random seed overriding the config");
        sub->add_option("--out", opt.out, "output directory");
        sub->add_option("--format", opt.format, "json, csv or both")->check(CLI::IsMember({"json", "csv", "both"}));
        sub->add_option("--baseline", opt.baseline, "frozen calibration bands");
        sub->add_flag("--freeze-baseline", opt.freeze, "store the measured bands into --baseline");
        sub->callback([&command, name = name] { command = name; });
    }
    CLI11_PARSE(app, argc, argv);
    for (auto* sub : app.get_subcommands())
        if (sub->count("--seed")) opt.seed = seed;
    try {
        return run(command, opt);
    } catch (const pdir::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
