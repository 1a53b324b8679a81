#pragma once
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pdir::harness {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

struct Band {
    double lo = 0.0, hi = 0.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};

struct CheckRecord {
    std::string name;
    std::vector<double> value;
    Band band;
    bool pass = false;
    std::string provenance;  // exact | oracle | invariant | calibrated
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite = "all") : suite_(std::move(suite)) {}

    // verdict: every value inside the band
    const CheckRecord& add(std::string name, std::vector<double> value, Band band, std::string provenance);
    const CheckRecord& add(std::string name, double value, Band band, std::string provenance) {
        return add(std::move(name), std::vector<double>{value}, band, std::move(provenance));
    }
    // explicit verdict for checks whose pass condition is not a band
    const CheckRecord& add_verdict(std::string name, std::vector<double> value, Band band, bool pass,
                                   std::string provenance);

    Json& environment() { return env_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::string& suite() const { return suite_; }
    bool passed() const;

    Json to_json() const;
    std::string to_csv() const;

private:
    std::string suite_;
    Json env_ = Json::object();
    std::vector<CheckRecord> checks_;
};

enum class Format { json, csv, both };
Format parse_format(const std::string& s);
// writes report.json and/or report.csv into dir, creating it
void write_report(const VerificationReport& r, const std::filesystem::path& dir, Format fmt);

// Frozen empirical bands. A calibrated check passes when its measured [lo, hi] lies inside
// the frozen band widened by a factor 2 on each side; without a frozen entry only positivity
// and finiteness are asserted. In freeze mode the measured band is stored and passes.
class Calibration {
public:
    Calibration() = default;
    static Calibration load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    void set_freeze(bool on) { freeze_ = on; }
    bool freezing() const { return freeze_; }
    std::optional<Band> frozen(const std::string& name) const;
    void store(const std::string& name, Band b) { bands_[name] = b; }

    const CheckRecord& check(VerificationReport& r, const std::string& name, double lo, double hi);

private:
    std::map<std::string, Band> bands_;
    bool freeze_ = false;
};

}  // namespace pdir::harness
