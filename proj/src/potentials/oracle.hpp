#pragma once
#include <array>

#include "dirac/coefficients.hpp"
#include "spectral/profile.hpp"

namespace pdir::potentials {

enum class DataKind { dirichlet, neumann };

// Closed-form decaying solution of the mode equation
//   A00 rho^2 - i rho (A0par + Apar0).xi - xi^T Aparpar xi - i tau = 0,
// u(lambda) = u0 e^{-rho lambda}, with Re rho > 0 on the upper side and
// Re rho < 0 on the lower side.
struct ModeOracle {
    cd rho_upper{0.0}, rho_lower{0.0};
    cd rho{0.0};        // root used on the requested side
    cd u0{0.0};         // Dirichlet value
    cd conormal0{0.0};  // conormal derivative at lambda = 0 from the requested side
    cd dtn{0.0};        // conormal per unit Dirichlet value
    cd ntd{0.0};        // inverse of dtn
    cd single_layer_trace{0.0};  // boundary value of the single layer for a unit density
    HalfSpace side = HalfSpace::upper;

    cd u(double lambda) const { return u0 * std::exp(-rho * lambda); }
    cd du(double lambda) const { return -rho * u(lambda); }
};

// A is the (n+1)x(n+1) coefficient matrix with index 0 normal. Throws
// InternalError if a root lies on the imaginary axis.
ModeOracle per_mode_bvp_oracle(const dirac::Mat& A, const std::array<double, kMaxSpatialDim>& xi, double tau,
                               DataKind data, cd value, HalfSpace side = HalfSpace::upper);

}  // namespace pdir::potentials
