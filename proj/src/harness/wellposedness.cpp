#include "harness/wellposedness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "potentials/layers.hpp"
#include "potentials/modal.hpp"
#include "spectral/errors.hpp"

namespace pdir::harness {

bool Wellposedness::all_invertible() const {
    return std::all_of(operators.begin(), operators.end(), [](const auto& o) { return o.invertible; });
}

const OperatorDiagnostic& Wellposedness::at(const std::string& name) const {
    for (const auto& o : operators)
        if (o.name == name) return o;
    throw UsageError("wellposedness: no operator named " + name);
}

Wellposedness wellposedness_diagnostics(const dirac::SpectralProjectorSet& proj, double s, double floor) {
    if (!(s >= -1.0 && s <= 0.0)) throw UsageError("wellposedness_diagnostics: s must lie in [-1, 0]");
    const std::vector<std::string> names = {"1+s_pp", "1-s_pp", "s_pr", "s_rp", "1+s_rr", "1-s_rr", "N_perp", "N_r"};
    Wellposedness w;
    w.s = s;
    w.floor = floor;
    for (const auto& nm : names) w.operators.push_back({nm, std::numeric_limits<double>::infinity(), 0.0, 0, false});

    const int n = proj.family().n();
    const auto ops = potentials::mode_operators(proj.family());
    for (std::size_t i = 0; i < proj.size(); ++i) {
        const auto& m = proj[i];
        if (m.zero_mode) continue;
        const Eigen::Matrix2cd C = potentials::range_coordinates(m.chi_plus, m.f, n);
        Eigen::Index col = 0;
        C.colwise().norm().maxCoeff(&col);
        const Eigen::Vector2cd v = C.col(col) / C.col(col).norm();
        const double vals[8] = {std::abs(1.0 + m.spp), std::abs(1.0 - m.spp), std::abs(m.spr), std::abs(m.srp),
                                std::abs(1.0 + m.srr), std::abs(1.0 - m.srr), std::abs(v(0)), std::abs(v(1))};
        for (std::size_t k = 0; k < 8; ++k) {
            auto& o = w.operators[k];
            o.inf = std::min(o.inf, vals[k]);
            o.sup = std::max(o.sup, vals[k]);
            if (vals[k] <= floor) ++o.degenerate;
        }
        Eigen::Matrix2cd sgn;
        sgn << m.spp, m.spr, m.srp, m.srr;
        const Eigen::Matrix2cd from_layers =
            potentials::chi_plus_from_layers(ops[i]) - potentials::chi_minus_from_layers(ops[i]);
        w.layer_residual = std::max(w.layer_residual, (sgn - from_layers).norm() / std::max(1.0, sgn.norm()));
    }
    for (auto& o : w.operators) o.invertible = o.inf > floor;
    return w;
}

}  // namespace pdir::harness
