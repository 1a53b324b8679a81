#pragma once
#include <cstddef>

#include "energy/delta_form.hpp"

namespace pdir::energy {

enum class BoundaryKind { neumann, dirichlet };

struct SolveOptions {
    double tol = 1e-11;              // GMRES relative tolerance
    std::size_t max_iterations = 0;  // 0 means 10 * dof
    int restart = 60;
    bool dense_fallback = true;      // dense LU when GMRES stalls and dof <= dense_limit
    std::size_t dense_limit = 4096;
};

struct SlabSolution {
    SlabFunction u;
    double residual = 0.0;  // relative residual of the discrete weak formulation
    std::size_t iterations = 0;
    bool used_dense = false;
};

// Neumann: a_delta(u, v) = -<f, (1 + delta H) v|_0> for every v.
// Dirichlet: u|_0 = f and a_delta(u, v) = 0 for v vanishing at lambda = 0.
// Throws UsageError when kappa - C delta <= 0 and SolverError when the budget is exhausted.
SlabSolution solve_energy_bvp(const DeltaForm& form, BoundaryKind kind, const ScalarField& f,
                              const SolveOptions& opt = {});

// Conormal derivative g of a slab function: the boundary functional
// a_delta(u, v) = -<g, (1 + delta H) v|_0> for v supported at node 0.
ScalarField discrete_conormal(const DeltaForm& form, const SlabFunction& u);

}  // namespace pdir::energy
