#pragma once
#include <Eigen/Dense>
#include <cstddef>
#include <random>

#include "dirac/coefficients.hpp"
#include "spectral/field.hpp"

namespace pdir::energy {

// Dense L = d_t - div_x A_par(x,t) grad_x on the physical samples of an (x,t) grid.
struct KatoOperator {
    Grid grid;
    Eigen::MatrixXcd L;
    double kappa = 0.0;  // min over points of the ellipticity of A_par

    ScalarField apply(const ScalarField& u) const;
};

inline constexpr std::size_t kDenseLimit = 4096;

// A may be the full (n+1)x(n+1) matrix (its spatial block is used) or already n x n.
// Throws UsageError above kDenseLimit points.
KatoOperator assemble_parabolic_L(const dirac::CoefficientMatrix& A, const Grid& g);

// min over trials of Re<Lu,u> - kappa ||grad u||^2, with ||grad u|| = 1
double accretivity_margin(const KatoOperator& op, int trials, std::mt19937_64& rng);

struct KatoSqrt {
    Eigen::MatrixXcd R;          // principal square root
    double residual = 0.0;       // ||R^2 - L||_F / ||L||_F
    double min_real_eig = 0.0;   // smallest Re of the spectrum of L
};

// Schur-based principal square root. AccretivityError when an eigenvalue has Re < -1e-10.
KatoSqrt kato_sqrt(const KatoOperator& op);

struct KatoRatios {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    double sqrt_residual = 0.0;
    double min_real_eig = 0.0;
};

// Extremes of ||sqrt(L) u|| / (||grad u||^2 + ||D^{1/2} u||^2)^{1/2} over random mean-free u.
KatoRatios kato_sqrt_ratio(const KatoOperator& op, int trials, std::mt19937_64& rng);
KatoRatios kato_sqrt_ratio(const KatoOperator& op, const KatoSqrt& root, int trials, std::mt19937_64& rng);

}  // namespace pdir::energy
