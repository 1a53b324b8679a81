#pragma once
#include <random>

#include "dirac/projectors.hpp"

namespace pdir::harness {

struct RatioBand {
    double min = 0.0, max = 0.0;
    int samples = 0;
};

// Extremes of ||h_perp||_2 / ||h_r||_2 over chi^+ projections of random compatible data.
// Data with ||chi^+ h|| < 1e-8 are skipped. Throws UsageError for non-Hermitian coefficients.
RatioBand rellich_ratio(const dirac::SpectralProjectorSet& proj, int samples, std::mt19937_64& rng);

// Per-mode extremes of |v_perp| / |v_r| over the range of chi^+ at nonzero frequencies.
RatioBand rellich_mode_band(const dirac::SpectralProjectorSet& proj);

}  // namespace pdir::harness
