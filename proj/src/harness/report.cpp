#include "harness/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "spectral/errors.hpp"

namespace pdir::harness {

namespace {

Json number(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

double from_json_number(const Json& j) {
    if (j.is_number()) return j.get<double>();
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::numeric_limits<double>::quiet_NaN();
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

}  // namespace

const CheckRecord& VerificationReport::add(std::string name, std::vector<double> value, Band band,
                                           std::string provenance) {
    bool pass = !value.empty();
    for (double v : value) pass = pass && band.contains(v);
    return add_verdict(std::move(name), std::move(value), band, pass, std::move(provenance));
}

const CheckRecord& VerificationReport::add_verdict(std::string name, std::vector<double> value, Band band, bool pass,
                                                   std::string provenance) {
    checks_.push_back({std::move(name), std::move(value), band, pass, std::move(provenance)});
    return checks_.back();
}

bool VerificationReport::passed() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

Json VerificationReport::to_json() const {
    Json j;
    j["version"] = kReportSchemaVersion;
    j["suite"] = suite_;
    j["environment"] = env_;
    Json arr = Json::array();
    for (const auto& c : checks_) {
        Json r;
        r["name"] = c.name;
        if (c.value.size() == 1) {
            r["value"] = number(c.value.front());
        } else {
            Json v = Json::array();
            for (double x : c.value) v.push_back(number(x));
            r["value"] = v;
        }
        r["band"] = Json::array({number(c.band.lo), number(c.band.hi)});
        r["verdict"] = c.pass ? "pass" : "fail";
        r["provenance"] = c.provenance;
        arr.push_back(r);
    }
    j["checks"] = arr;
    return j;
}

std::string VerificationReport::to_csv() const {
    std::ostringstream os;
    os << "suite,name,value,band_lo,band_hi,verdict,provenance\n";
    for (const auto& c : checks_) {
        std::string v;
        for (std::size_t i = 0; i < c.value.size(); ++i) v += (i ? ";" : "") + fmt(c.value[i]);
        os << suite_ << ',' << c.name << ',' << v << ',' << fmt(c.band.lo) << ',' << fmt(c.band.hi) << ','
           << (c.pass ? "pass" : "fail") << ',' << c.provenance << '\n';
    }
    return os.str();
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "both") return Format::both;
    throw UsageError("unknown report format '" + s + "'");
}

void write_report(const VerificationReport& r, const std::filesystem::path& dir, Format fmt) {
    std::filesystem::create_directories(dir);
    if (fmt != Format::csv) {
        std::ofstream os(dir / "report.json");
        if (!os) throw UsageError("cannot write " + (dir / "report.json").string());
        os << r.to_json().dump(2) << '\n';
    }
    if (fmt != Format::json) {
        std::ofstream os(dir / "report.csv");
        if (!os) throw UsageError("cannot write " + (dir / "report.csv").string());
        os << r.to_csv();
    }
}

Calibration Calibration::load(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot read baseline " + path.string());
    Calibration c;
    Json j;
    try {
        j = Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("baseline " + path.string() + ": " + e.what());
    }
    if (!j.contains("bands") || !j["bands"].is_object()) throw UsageError("baseline " + path.string() + ": missing bands");
    for (const auto& [k, v] : j["bands"].items()) {
        if (!v.is_array() || v.size() != 2) throw UsageError("baseline entry " + k + " must be [lo, hi]");
        c.bands_[k] = {from_json_number(v[0]), from_json_number(v[1])};
    }
    return c;
}

void Calibration::save(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    Json j;
    j["version"] = kReportSchemaVersion;
    Json b = Json::object();
    for (const auto& [k, v] : bands_) b[k] = Json::array({number(v.lo), number(v.hi)});
    j["bands"] = b;
    std::ofstream os(path);
    if (!os) throw UsageError("cannot write baseline " + path.string());
    os << j.dump(2) << '\n';
}

std::optional<Band> Calibration::frozen(const std::string& name) const {
    const auto it = bands_.find(name);
    if (it == bands_.end()) return std::nullopt;
    return it->second;
}

const CheckRecord& Calibration::check(VerificationReport& r, const std::string& name, double lo, double hi) {
    const std::vector<double> measured{lo, hi};
    if (freeze_) {
        bands_[name] = {lo, hi};
        return r.add_verdict(name, measured, {lo, hi}, std::isfinite(lo) && std::isfinite(hi), "calibrated");
    }
    if (const auto b = frozen(name)) {
        const Band slack{b->lo > 0 ? b->lo / 2.0 : 2.0 * b->lo, b->hi > 0 ? 2.0 * b->hi : b->hi / 2.0};
        return r.add(name, measured, slack, "calibrated");
    }
    return r.add(name, measured, {std::numeric_limits<double>::min(), std::numeric_limits<double>::max()}, "calibrated");
}

}  // namespace pdir::harness
