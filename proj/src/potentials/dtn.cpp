#include "potentials/dtn.hpp"

#include <algorithm>
#include <cmath>

namespace pdir::potentials {

namespace {

struct Side {
    cd nd{0.0}, dn{0.0};
    bool singular = true;
    double fact = 0.0, inv = 0.0;
};

// rows of (sgn - sigma) h = 0 with sigma = +1 (upper) or -1 (lower):
//   (spp - sigma) hp + spr hr = 0,  srp hp + (srr - sigma) hr = 0
Side solve_side(const dirac::ModeProjectors& P, double sigma, double floor) {
    Side s;
    const cd a = sigma - P.spp, b = P.spr, c = P.srp, e = sigma - P.srr;
    if (std::abs(a) < floor || std::abs(b) < floor || std::abs(c) < floor || std::abs(e) < floor) return s;
    s.singular = false;
    const cd nd1 = a / b, nd2 = c / e;
    const cd dn1 = b / a, dn2 = e / c;
    s.nd = nd1;
    s.dn = dn1;
    const double scale = std::max({std::abs(nd1), std::abs(nd2), 1e-300});
    s.fact = std::max(std::abs(nd1 - nd2) / scale, std::abs(dn1 - dn2) / std::max(std::abs(dn1), 1e-300));
    s.inv = std::max(std::abs(dn1 * nd1 - 1.0), std::abs(dn2 * nd2 - 1.0));
    return s;
}

}  // namespace

DtnOperators dtn_operators(const dirac::SpectralProjectorSet& proj, double floor) {
    DtnOperators D;
    const std::size_t N = proj.size();
    D.nd_upper.assign(N, 0.0);
    D.dn_upper.assign(N, 0.0);
    D.nd_lower.assign(N, 0.0);
    D.dn_lower.assign(N, 0.0);
    D.singular_upper.assign(N, false);
    D.singular_lower.assign(N, false);
    for (std::size_t i = 0; i < N; ++i) {
        const auto& P = proj[i];
        if (P.zero_mode) continue;
        const Side up = solve_side(P, 1.0, floor), lo = solve_side(P, -1.0, floor);
        D.singular_upper[i] = up.singular;
        D.singular_lower[i] = lo.singular;
        if (up.singular) ++D.excluded_upper;
        else {
            D.nd_upper[i] = up.nd;
            D.dn_upper[i] = up.dn;
            D.factorization_residual = std::max(D.factorization_residual, up.fact);
            D.inverse_residual = std::max(D.inverse_residual, up.inv);
        }
        if (lo.singular) ++D.excluded_lower;
        else {
            D.nd_lower[i] = lo.nd;
            D.dn_lower[i] = lo.dn;
            D.factorization_residual = std::max(D.factorization_residual, lo.fact);
            D.inverse_residual = std::max(D.inverse_residual, lo.inv);
        }
    }
    return D;
}

}  // namespace pdir::potentials
