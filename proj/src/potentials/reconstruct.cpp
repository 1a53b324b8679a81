#include "potentials/reconstruct.hpp"

#include <cmath>
#include <string>

#include "dirac/scales.hpp"
#include "dirac/symbol_family.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::potentials {

BoundaryTraces boundary_traces(const ConormalField& h) {
    const Grid& g = h.grid();
    const int n = g.n;
    const auto v = dirac::modal_vectors(h);
    ScalarField u(g, Space::spectral);
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency f = g.frequency(i);
        if (f.is_zero()) continue;
        u[i] = dirac::e_r(f, n).tail(n + 1).dot(v[i].tail(n + 1)) / dirac::d_r(f);
    }
    return {h.space() == Space::spectral ? u : to_physical(u), h.perp()};
}

Reconstruction potential_reconstruct(const ConormalProfile& F, const dirac::CoefficientMatrix& A, double tol) {
    F.validate(1);
    if (!A.is_constant()) throw UsageError("potential_reconstruct: coefficients must be constant");
    const dirac::Mat& a = A.value();
    const Grid& g = F.fields.front().grid();
    const int n = g.n;
    if (A.n() != n || F.fields.front().ncomp() != n + 2)
        throw UsageError("potential_reconstruct: dimension mismatch between F and A");
    const Space side = F.fields.front().space();
    const std::size_t N = g.points();
    const cd I(0.0, 1.0);

    Reconstruction R;
    R.u = ScalarProfile{F.nodes, F.side, {}};
    R.du = ScalarProfile{F.nodes, F.side, {}};
    double res2 = 0.0, tot2 = 0.0;
    std::vector<cd> du00(F.size());
    for (std::size_t j = 0; j < F.size(); ++j) {
        const auto v = dirac::modal_vectors(F.fields[j]);
        ScalarField u(g, Space::spectral), du(g, Space::spectral);
        for (std::size_t i = 0; i < N; ++i) {
            const Frequency f = g.frequency(i);
            const dirac::Vec& Fi = v[i];
            tot2 += Fi.squaredNorm();
            cd ui = 0.0;
            if (!f.is_zero()) {
                const dirac::Vec er = dirac::e_r(f, n);
                ui = er.tail(n + 1).dot(Fi.tail(n + 1)) / dirac::d_r(f);
                res2 += (Fi.tail(n + 1) - dirac::d_r(f) * ui * er.tail(n + 1)).squaredNorm();
            } else {
                res2 += Fi.tail(n + 1).squaredNorm();
            }
            cd tang = 0.0;
            for (int k = 0; k < n; ++k) tang += a(0, 1 + k) * I * f.xi[static_cast<std::size_t>(k)];
            u[i] = ui;
            du[i] = (Fi(0) - tang * ui) / a(0, 0);
        }
        du00[j] = du[0];
        R.u.fields.push_back(std::move(u));
        R.du.fields.push_back(std::move(du));
    }
    // (0,0) mode: integrate in the signed coordinate, anchored at the farthest node
    const std::size_t J = F.size();
    cd acc = 0.0;
    R.u.fields[J - 1][0] = 0.0;
    for (std::size_t j = J - 1; j-- > 0;) {
        acc -= 0.5 * (du00[j] + du00[j + 1]) * (F.lambda(j + 1) - F.lambda(j));
        R.u.fields[j][0] = acc;
    }
    R.residual = tot2 > 0 ? std::sqrt(res2 / tot2) : 0.0;
    if (R.residual > tol)
        throw DomainError("potential_reconstruct: F is not a conormal differential, residual " + std::to_string(R.residual));
    if (side == Space::physical) {
        for (auto& f : R.u.fields) f = to_physical(f);
        for (auto& f : R.du.fields) f = to_physical(f);
    }
    return R;
}

}  // namespace pdir::potentials
