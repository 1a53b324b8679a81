#pragma once
#include <cstddef>
#include <vector>

#include "dirac/projectors.hpp"

namespace pdir::potentials {

// Per-frequency Neumann-to-Dirichlet (h_perp -> h_r, in e_r coordinates) and
// Dirichlet-to-Neumann multipliers on both half-spaces. Each is computed by the
// two factorizations through the rows of sgn(pm).
struct DtnOperators {
    std::vector<cd> nd_upper, dn_upper, nd_lower, dn_lower;
    std::vector<bool> singular_upper, singular_lower;
    std::size_t excluded_upper = 0, excluded_lower = 0;
    // worst over admitted frequencies
    double factorization_residual = 0.0;  // disagreement between the two factorizations
    double inverse_residual = 0.0;        // |Gamma_DN Gamma_ND - 1|
};

// Frequencies where a factor has modulus below `floor` are flagged and excluded.
DtnOperators dtn_operators(const dirac::SpectralProjectorSet& proj, double floor = 1e-10);

}  // namespace pdir::potentials
