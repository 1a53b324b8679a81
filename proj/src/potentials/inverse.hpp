#pragma once
#include "dirac/symbol_family.hpp"
#include "spectral/field.hpp"

namespace pdir::potentials {

// Coefficients diag(1, A_parpar) of the lambda-augmented operator
// d_t - div_x A_parpar grad_x - d_lambda^2 built from the family's A.
dirac::Mat augmented_coefficients(const dirac::DiracSymbolFamily& fam);

// int_{eps <= |lambda| <= R} S_lambda f dlambda for the augmented operator,
// by the trapezoid rule in log(lambda) on `nodes_per_unit` nodes per unit of
// log(lambda). f must have a vanishing (0,0) mode. eps == R gives zero.
ScalarField inverse_whole_space(const ScalarField& f, const dirac::DiracSymbolFamily& fam, double eps, double R,
                                int nodes_per_unit = 24);

// Same integral in closed form per mode (exponential sums over the eigenvalues of pm).
ScalarField inverse_whole_space_exact(const ScalarField& f, const dirac::DiracSymbolFamily& fam, double eps, double R);

// L u = d_t u - div_x A_parpar grad_x u (symbol i tau + xi^T A_parpar xi)
ScalarField apply_parabolic_operator(const ScalarField& u, const dirac::DiracSymbolFamily& fam);

}  // namespace pdir::potentials
