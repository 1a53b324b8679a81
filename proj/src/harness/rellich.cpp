#include "harness/rellich.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dirac/scales.hpp"
#include "spectral/errors.hpp"

namespace pdir::harness {

namespace {

void require_hermitian(const dirac::SpectralProjectorSet& proj) {
    const dirac::Mat& A = proj.family().A();
    if ((A - A.adjoint()).norm() > 1e-12 * std::max(1.0, A.norm()))
        throw UsageError("rellich_ratio: coefficients must be Hermitian");
}

}  // namespace

RatioBand rellich_ratio(const dirac::SpectralProjectorSet& proj, int samples, std::mt19937_64& rng) {
    require_hermitian(proj);
    const Grid& g = proj.family().grid();
    RatioBand band{std::numeric_limits<double>::infinity(), 0.0, 0};
    for (int t = 0; t < samples; ++t) {
        auto v = dirac::modal_vectors(dirac::random_compatible_field(g, rng));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = proj[i].zero_mode ? dirac::Vec::Zero(v[i].size()) : dirac::Vec(proj[i].chi_plus * v[i]);
        const ConormalField h = dirac::from_modal_vectors(g, v, Space::spectral);
        if (h.norm() < 1e-8) continue;
        const double q = h.perp().norm() / h.norm_r();
        band.min = std::min(band.min, q);
        band.max = std::max(band.max, q);
        ++band.samples;
    }
    return band;
}

RatioBand rellich_mode_band(const dirac::SpectralProjectorSet& proj) {
    require_hermitian(proj);
    RatioBand band{std::numeric_limits<double>::infinity(), 0.0, 0};
    for (std::size_t i = 0; i < proj.size(); ++i) {
        const auto& mp = proj[i];
        if (mp.zero_mode) continue;
        // chi^+ has rank one on ran(p): take its dominant column
        Eigen::Index col = 0;
        mp.chi_plus.colwise().norm().maxCoeff(&col);
        const dirac::Vec v = mp.chi_plus.col(col);
        const double q = std::abs(v(0)) / v.tail(v.size() - 1).norm();
        band.min = std::min(band.min, q);
        band.max = std::max(band.max, q);
        ++band.samples;
    }
    return band;
}

}  // namespace pdir::harness
