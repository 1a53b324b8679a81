#include "potentials/oracle.hpp"

#include <cmath>

#include "spectral/errors.hpp"

namespace pdir::potentials {

ModeOracle per_mode_bvp_oracle(const dirac::Mat& A, const std::array<double, kMaxSpatialDim>& xi, double tau,
                               DataKind data, cd value, HalfSpace side) {
    const int n = static_cast<int>(A.rows()) - 1;
    if (n < 1 || n > kMaxSpatialDim) throw UsageError("per_mode_bvp_oracle: unsupported dimension");
    const cd I(0.0, 1.0);
    double xi2 = 0.0;
    for (int j = 0; j < n; ++j) xi2 += xi[static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j)];
    if (xi2 == 0.0 && tau == 0.0) throw UsageError("per_mode_bvp_oracle: zero frequency");

    cd b = 0.0, c = 0.0, tang = 0.0;  // b: (A0par + Apar0).xi, c: xi^T Aparpar xi
    for (int j = 0; j < n; ++j) {
        const double xj = xi[static_cast<std::size_t>(j)];
        b += (A(0, 1 + j) + A(1 + j, 0)) * xj;
        tang += A(0, 1 + j) * xj;
        for (int k = 0; k < n; ++k) c += xj * A(1 + j, 1 + k) * xi[static_cast<std::size_t>(k)];
    }
    // A00 rho^2 + (-i b) rho + (-c - i tau) = 0
    const cd a2 = A(0, 0), a1 = -I * b, a0 = -c - I * tau;
    const cd disc = std::sqrt(a1 * a1 - 4.0 * a2 * a0);
    const cd r1 = (-a1 + disc) / (2.0 * a2), r2 = (-a1 - disc) / (2.0 * a2);
    const double scale = std::abs(r1) + std::abs(r2);
    if (std::abs(r1.real()) <= 1e-13 * scale || std::abs(r2.real()) <= 1e-13 * scale || r1.real() * r2.real() > 0)
        throw InternalError("per_mode_bvp_oracle: characteristic roots do not split across the imaginary axis");

    ModeOracle o;
    o.side = side;
    o.rho_upper = r1.real() > 0 ? r1 : r2;
    o.rho_lower = r1.real() > 0 ? r2 : r1;
    o.rho = side == HalfSpace::upper ? o.rho_upper : o.rho_lower;
    o.dtn = -A(0, 0) * o.rho + I * tang;
    o.ntd = 1.0 / o.dtn;
    o.u0 = data == DataKind::dirichlet ? value : value * o.ntd;
    o.conormal0 = o.dtn * o.u0;
    // continuous across lambda = 0 with unit conormal jump (upper minus lower)
    o.single_layer_trace = -1.0 / (A(0, 0) * (o.rho_upper - o.rho_lower));
    return o;
}

}  // namespace pdir::potentials
