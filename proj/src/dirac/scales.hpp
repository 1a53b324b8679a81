#pragma once
#include <random>

#include "dirac/projectors.hpp"
#include "spectral/field.hpp"

namespace pdir::dirac {

enum class ScaleOperator { P, PM };

// || [op]^s h ||_2 computed per mode with b(z) = [z]^s, b(0) = 0, for s in [-1, 0].
// Throws DomainError when h is incompatible (residual above tol).
double sobolev_scale_norm(const ConormalField& h, double s, ScaleOperator op, const DiracSymbolFamily& fam,
                          double tol = 1e-8);

// Per-mode helpers shared with the potentials module.
std::vector<Vec> modal_vectors(const ConormalField& h);  // spectral coefficients per frequency
ConormalField from_modal_vectors(const Grid& g, const std::vector<Vec>& v, Space side);

// Random datum in ran(P): free normal part, r-block the gradient data of a potential.
// band > 0 restricts to |k|, |m| <= band.
ConormalField random_compatible_field(const Grid& g, std::mt19937_64& rng, int band = 0);

}  // namespace pdir::dirac
