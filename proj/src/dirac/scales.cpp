#include "dirac/scales.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::dirac {

std::vector<Vec> modal_vectors(const ConormalField& h) {
    const ConormalField s = h.space() == Space::spectral ? h : to_spectral(h);
    const std::size_t N = s.grid().points();
    const int d = s.ncomp();
    std::vector<Vec> out(N, Vec(d));
    for (int c = 0; c < d; ++c)
        for (std::size_t i = 0; i < N; ++i) out[i](c) = s[c][i];
    return out;
}

ConormalField from_modal_vectors(const Grid& g, const std::vector<Vec>& v, Space side) {
    if (v.size() != g.points()) throw UsageError("from_modal_vectors: one vector per frequency required");
    const int d = static_cast<int>(v.front().size());
    std::vector<ScalarField> comps;
    for (int c = 0; c < d; ++c) {
        ScalarField f(g, Space::spectral);
        for (std::size_t i = 0; i < v.size(); ++i) f[i] = v[i](c);
        comps.push_back(side == Space::spectral ? f : to_physical(f));
    }
    return ConormalField(std::move(comps));
}

double sobolev_scale_norm(const ConormalField& h, double s, ScaleOperator op, const DiracSymbolFamily& fam, double tol) {
    if (s < -1.0 || s > 0.0) throw UsageError("sobolev_scale_norm: s must lie in [-1, 0]");
    if (h.ncomp() != fam.n() + 2) throw UsageError("sobolev_scale_norm: component count does not match the family");
    const double res = h.compatibility_residual();
    if (res > tol) throw DomainError("sobolev_scale_norm: datum not in ran(P), residual " + std::to_string(res));
    const auto v = modal_vectors(h);
    const Grid& g = fam.grid();
    double acc = 0.0;
    const auto b = funcs::bracket_power(s);
    for (std::size_t i = 0; i < g.points(); ++i) {
        const auto m = fam.mode(i);
        if (m.f.is_zero()) continue;
        const Mat& T = op == ScaleOperator::P ? m.p : m.pm;
        const Vec w = matrix_function(T, b, describe(m.f, fam.n())) * v[i];
        acc += w.squaredNorm();
    }
    return std::sqrt(g.cell_volume() * acc);
}

ConormalField random_compatible_field(const Grid& g, std::mt19937_64& rng, int band) {
    std::normal_distribution<double> nd;
    auto rnd = [&]() {
        ScalarField f(g, Space::spectral);
        for (std::size_t i = 0; i < g.points(); ++i) {
            const auto q = g.frequency(i);
            bool inside = band <= 0 || std::abs(q.m) <= band;
            for (int d = 0; d < g.n; ++d) inside = inside && (band <= 0 || std::abs(q.k[static_cast<std::size_t>(d)]) <= band);
            if (inside && !q.is_zero()) f[i] = cd(nd(rng), nd(rng));
        }
        return f;
    };
    // r-block from the gradient data of a potential v, scaled by |(xi, tau)|^{-1}
    ScalarField v = rnd();
    for (std::size_t i = 0; i < g.points(); ++i) {
        const auto q = g.frequency(i);
        if (!q.is_zero()) v[i] /= std::sqrt(q.xi_norm2() + std::abs(q.tau));
    }
    std::vector<ScalarField> comps{rnd()};
    for (int d = 0; d < g.n; ++d) comps.push_back(apply_symbol(symbols::gradient(d), v));
    comps.push_back(apply_symbol(symbols::hilbert_half_derivative(), v));
    return to_physical(ConormalField(std::move(comps)));
}

}  // namespace pdir::dirac
