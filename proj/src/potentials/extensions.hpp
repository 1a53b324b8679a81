#pragma once
#include <vector>

#include "dirac/projectors.hpp"
#include "spectral/profile.hpp"

namespace pdir::potentials {

// Conormal datum at lambda = 0 with its regularity index.
struct BoundaryDatum {
    ConormalField value;
    double s = -0.5;
    HalfSpace side = HalfSpace::upper;

    // throws UsageError for s outside [-1, 0], DomainError when value is not in ran(P)
    void validate(double tol = 1e-8) const;
};

// nodes must be positive and strictly increasing
void check_nodes(const std::vector<double>& nodes);

// F(lambda) = e^{-lambda pm} chi^+(pm) h on the upper side and
// e^{-lambda pm} chi^-(pm) h (lambda < 0) on the lower side, per mode.
ConormalProfile cauchy_extension(const BoundaryDatum& h, const dirac::SpectralProjectorSet& proj,
                                 const std::vector<double>& nodes);

enum class Operand { pm, mp };

// F(lambda) = e^{-|lambda| [T]} h with T = pm or mp; kernel modes stay constant.
ConormalProfile semigroup_extension(const ConormalField& h, const dirac::DiracSymbolFamily& fam, Operand operand,
                                    const std::vector<double>& nodes, HalfSpace side = HalfSpace::upper);

}  // namespace pdir::potentials
