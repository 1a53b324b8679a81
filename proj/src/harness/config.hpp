#pragma once
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "harness/nontangential.hpp"
#include "json.hpp"
#include "spectral/errors.hpp"

namespace pdir::harness {

class ConfigError : public UsageError {
public:
    using UsageError::UsageError;
};

struct GridSpec {
    int n = 1;
    int Nx = 16;
    int Nt = 16;
    double Lx = 2.0 * 3.141592653589793;
    std::optional<double> Lt;  // defaults to Lx^2
    Grid make() const;
};

struct NodeSpec {
    double lmin = 1e-3;
    double ratio = 1.189207115002721;
    double lmax = 1e2;
    std::vector<double> make() const;
};

struct Config {
    std::vector<std::string> suites;
    std::uint64_t seed = 20240601;
    GridSpec grid;
    NodeSpec nodes;
    int coefficient_samples = 3;  // random constant A per suite
    int trials = 20;              // random data per coefficient
    // energy
    double Lambda = 8.0;
    int Nlambda = 64;
    std::optional<double> delta;  // defaults to kappa / (2C)
    GridSpec energy_grid{1, 8, 8};
    // kato
    GridSpec kato_grid{1, 8, 8};
    int kato_refined = 12;
    int kato_cells = 4;
    std::size_t dense_limit = 4096;
    // estimates and diagnostics
    WhitneyConfig whitney;
    std::vector<double> s_values{-0.5};
    double floor = 1e-6;
};

const std::vector<std::string>& known_suites();

// Unknown keys, wrong types and unknown suite names raise ConfigError.
Config parse_config(const nlohmann::json& j);
Config load_config(const std::filesystem::path& path);
nlohmann::ordered_json describe(const Config& c);

}  // namespace pdir::harness
