#include "harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace pdir::harness {

namespace {

using nlohmann::json;

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError(where + ": unknown key '" + k + "'");
}

template <class T>
void read(const json& j, const char* key, T& out, const std::string& where) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(where + "." + key + ": wrong type");
    }
}

GridSpec read_grid(const json& j, GridSpec g, const std::string& where) {
    check_keys(j, {"n", "Nx", "Nt", "Lx", "Lt"}, where);
    read(j, "n", g.n, where);
    read(j, "Nx", g.Nx, where);
    read(j, "Nt", g.Nt, where);
    read(j, "Lx", g.Lx, where);
    if (j.contains("Lt")) {
        double lt = 0.0;
        read(j, "Lt", lt, where);
        g.Lt = lt;
    }
    try {
        g.make();
    } catch (const Error& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return g;
}

nlohmann::ordered_json grid_json(const GridSpec& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["Nx"] = g.Nx;
    j["Nt"] = g.Nt;
    j["Lx"] = g.Lx;
    j["Lt"] = g.make().Lt;
    return j;
}

}  // namespace

Grid GridSpec::make() const { return Grid::make(n, Nx, Nt, Lx, Lt); }

std::vector<double> NodeSpec::make() const { return geometric_nodes(lmin, ratio, lmax); }

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s = {"calculus", "layers", "energy", "kato", "estimates", "diagnostics"};
    return s;
}

Config parse_config(const json& j) {
    Config c;
    check_keys(j, {"suites", "seed", "grid", "nodes", "coefficient_samples", "trials", "slab", "delta", "energy_grid",
                   "kato", "size_budget", "whitney", "s_values", "floor"},
               "config");
    read(j, "suites", c.suites, "config");
    for (const auto& s : c.suites)
        if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
            throw ConfigError("config.suites: unknown suite '" + s + "'");
    read(j, "seed", c.seed, "config");
    if (j.contains("grid")) c.grid = read_grid(j["grid"], c.grid, "config.grid");
    if (j.contains("energy_grid")) c.energy_grid = read_grid(j["energy_grid"], c.energy_grid, "config.energy_grid");
    if (j.contains("nodes")) {
        check_keys(j["nodes"], {"lmin", "ratio", "lmax"}, "config.nodes");
        read(j["nodes"], "lmin", c.nodes.lmin, "config.nodes");
        read(j["nodes"], "ratio", c.nodes.ratio, "config.nodes");
        read(j["nodes"], "lmax", c.nodes.lmax, "config.nodes");
        try {
            c.nodes.make();
        } catch (const Error& e) {
            throw ConfigError(std::string("config.nodes: ") + e.what());
        }
    }
    read(j, "coefficient_samples", c.coefficient_samples, "config");
    read(j, "trials", c.trials, "config");
    if (c.coefficient_samples < 1 || c.trials < 1) throw ConfigError("config: counts must be positive");
    if (j.contains("slab")) {
        check_keys(j["slab"], {"Lambda", "Nlambda"}, "config.slab");
        read(j["slab"], "Lambda", c.Lambda, "config.slab");
        read(j["slab"], "Nlambda", c.Nlambda, "config.slab");
        if (c.Nlambda < 8 || c.Lambda < 1.0) throw ConfigError("config.slab: need Nlambda >= 8 and Lambda >= 1");
    }
    if (j.contains("delta")) {
        double d = 0.0;
        read(j, "delta", d, "config");
        if (!(d > 0.0)) throw ConfigError("config.delta: must be positive");
        c.delta = d;
    }
    if (j.contains("kato")) {
        const json& k = j["kato"];
        check_keys(k, {"grid", "refined", "cells"}, "config.kato");
        if (k.contains("grid")) c.kato_grid = read_grid(k["grid"], c.kato_grid, "config.kato.grid");
        read(k, "refined", c.kato_refined, "config.kato");
        read(k, "cells", c.kato_cells, "config.kato");
        if (c.kato_cells < 1 || c.kato_grid.Nx % c.kato_cells || c.kato_grid.Nt % c.kato_cells ||
            c.kato_refined % c.kato_cells)
            throw ConfigError("config.kato: grid sizes must be multiples of cells");
    }
    if (j.contains("size_budget")) {
        check_keys(j["size_budget"], {"dense_points"}, "config.size_budget");
        read(j["size_budget"], "dense_points", c.dense_limit, "config.size_budget");
    }
    if (j.contains("whitney")) {
        check_keys(j["whitney"], {"c0", "c1", "c2", "c3"}, "config.whitney");
        read(j["whitney"], "c0", c.whitney.c0, "config.whitney");
        read(j["whitney"], "c1", c.whitney.c1, "config.whitney");
        read(j["whitney"], "c2", c.whitney.c2, "config.whitney");
        read(j["whitney"], "c3", c.whitney.c3, "config.whitney");
        try {
            c.whitney.validate();
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }
    read(j, "s_values", c.s_values, "config");
    for (double s : c.s_values)
        if (s < -1.0 || s > 0.0) throw ConfigError("config.s_values: entries must lie in [-1, 0]");
    read(j, "floor", c.floor, "config");
    return c;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot read config " + path.string());
    json j;
    try {
        j = json::parse(is);
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::ordered_json describe(const Config& c) {
    nlohmann::ordered_json j;
    j["seed"] = c.seed;
    j["grid"] = grid_json(c.grid);
    j["nodes"] = {{"lmin", c.nodes.lmin}, {"ratio", c.nodes.ratio}, {"lmax", c.nodes.lmax}};
    j["coefficient_samples"] = c.coefficient_samples;
    j["trials"] = c.trials;
    j["slab"] = {{"Lambda", c.Lambda}, {"Nlambda", c.Nlambda}};
    j["energy_grid"] = grid_json(c.energy_grid);
    j["kato"] = {{"grid", grid_json(c.kato_grid)}, {"refined", c.kato_refined}, {"cells", c.kato_cells}};
    j["whitney"] = {{"c0", c.whitney.c0}, {"c1", c.whitney.c1}, {"c2", c.whitney.c2}, {"c3", c.whitney.c3}};
    j["s_values"] = c.s_values;
    j["floor"] = c.floor;
    return j;
}

}  // namespace pdir::harness
