#pragma once
#include "dirac/coefficients.hpp"
#include "spectral/profile.hpp"

namespace pdir::potentials {

struct Reconstruction {
    ScalarProfile u;
    ScalarProfile du;  // d/dlambda u from the normal component
    double residual = 0.0;  // relative residual of the r-block gradient equations
    // the (0,0) mode is fixed by u = 0 at the farthest node; any constant may be added
    bool up_to_constant = true;
};

// Dirichlet value (from the r-block) and conormal derivative (normal component)
// of a boundary conormal datum.
struct BoundaryTraces {
    ScalarField value, conormal;
};
BoundaryTraces boundary_traces(const ConormalField& h);

// Recovers u from F = D_A u per mode: u from the r-block (least squares on e_r),
// d/dlambda u from F_perp = A00 du + A0par grad u. The (0,0) mode is integrated
// by the cumulative trapezoid rule. Throws DomainError when residual > tol.
Reconstruction potential_reconstruct(const ConormalProfile& F, const dirac::CoefficientMatrix& A, double tol = 1e-8);

}  // namespace pdir::potentials
