#pragma once
#include <string>
#include <vector>

#include "harness/config.hpp"
#include "harness/report.hpp"

namespace pdir::harness {

// Runs one suite, appending checks named "<suite>/<check>" to the report.
// Randomness is drawn from a generator seeded by (config seed, suite name).
void run_suite(const std::string& name, const Config& cfg, Calibration& cal, VerificationReport& report);

// Runs the listed suites in order (the config's list when `suites` is empty).
VerificationReport run_report(const Config& cfg, const std::vector<std::string>& suites, Calibration& cal,
                              const std::string& label = "all");

}  // namespace pdir::harness
