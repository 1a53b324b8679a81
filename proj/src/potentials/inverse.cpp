#include "potentials/inverse.hpp"

#include <cmath>

#include "dirac/matrix_function.hpp"
#include "potentials/modal.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::potentials {

dirac::Mat augmented_coefficients(const dirac::DiracSymbolFamily& fam) {
    const int n = fam.n();
    dirac::Mat B = dirac::Mat::Zero(n + 1, n + 1);
    B(0, 0) = 1.0;
    B.bottomRightCorner(n, n) = fam.A().bottomRightCorner(n, n);
    return B;
}

namespace {

void check_input(const ScalarField& f, const dirac::DiracSymbolFamily& fam, double eps, double R) {
    if (!(f.grid() == fam.grid())) throw UsageError("inverse_whole_space: grid does not match the family");
    if (!(eps > 0.0) || R < eps) throw UsageError("inverse_whole_space: need 0 < eps <= R");
    const ScalarField s = to_spectral(f);
    if (std::abs(s[0]) > 1e-12 * std::max(s.norm(), 1e-300) * std::sqrt(static_cast<double>(s.size())))
        throw UsageError("inverse_whole_space: f must have a vanishing (0,0) mode");
}

template <class PerMode>
ScalarField per_mode(const ScalarField& f, const dirac::DiracSymbolFamily& fam, PerMode op) {
    const dirac::Mat m = dirac::coefficient_multiplier(augmented_coefficients(fam));
    ScalarField s = to_spectral(f);
    const Grid& g = f.grid();
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency q = g.frequency(i);
        if (q.is_zero()) {
            s[i] = 0.0;
            continue;
        }
        s[i] = op(ModeOperator(q, m, fam.n())) * s[i];
    }
    return f.space() == Space::spectral ? s : to_physical(s);
}

}  // namespace

ScalarField inverse_whole_space(const ScalarField& f, const dirac::DiracSymbolFamily& fam, double eps, double R,
                                int nodes_per_unit) {
    check_input(f, fam, eps, R);
    if (nodes_per_unit < 2) throw UsageError("inverse_whole_space: nodes_per_unit must be at least 2");
    if (eps == R) return 0.0 * f;
    const double span = std::log(R / eps);
    const int K = std::max(2, static_cast<int>(std::ceil(span * nodes_per_unit)));
    const double h = span / K;
    return per_mode(f, fam, [&](const ModeOperator& op) {
        cd acc = 0.0;
        for (int k = 0; k <= K; ++k) {
            const double l = eps * std::exp(k * h);
            const double w = (k == 0 || k == K) ? 0.5 * h : h;
            acc += w * l * (op.single_layer(l) + op.single_layer(-l));
        }
        return acc;
    });
}

ScalarField inverse_whole_space_exact(const ScalarField& f, const dirac::DiracSymbolFamily& fam, double eps, double R) {
    check_input(f, fam, eps, R);
    const dirac::SectorFunction up{"int exp chi+", [=](cd z) {
                                       return z.real() > 0 ? (std::exp(-eps * z) - std::exp(-R * z)) / z : cd(0.0);
                                   }, 0.0};
    const dirac::SectorFunction down{"int exp chi-", [=](cd z) {
                                         return z.real() < 0 ? (std::exp(R * z) - std::exp(eps * z)) / z : cd(0.0);
                                     }, 0.0};
    return per_mode(f, fam, [&](const ModeOperator& op) {
        const std::string w = dirac::describe(op.frequency(), op.n());
        const dirac::Mat Gp = dirac::matrix_function(op.pm(), up, w);
        const dirac::Mat Gm = dirac::matrix_function(op.pm(), down, w);
        return -(op.p_inverse() * Gp.col(0))(0) + (op.p_inverse() * Gm.col(0))(0);
    });
}

ScalarField apply_parabolic_operator(const ScalarField& u, const dirac::DiracSymbolFamily& fam) {
    const int n = fam.n();
    const dirac::Mat App = fam.A().bottomRightCorner(n, n);
    ScalarField s = to_spectral(u);
    const Grid& g = u.grid();
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency q = g.frequency(i);
        cd sym(0.0, q.tau);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) sym += q.xi[static_cast<std::size_t>(a)] * App(a, b) * q.xi[static_cast<std::size_t>(b)];
        s[i] *= sym;
    }
    return u.space() == Space::spectral ? s : to_physical(s);
}

}  // namespace pdir::potentials
