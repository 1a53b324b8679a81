#pragma once
#include <span>

#include "spectral/field.hpp"

namespace pdir {

enum class Direction { forward, inverse };

// Unitary multi-dimensional DFT over a row-major array with the given extents.
// Thread safe: plans are cached behind a mutex, execution uses the new-array interface.
void fft_inplace(std::span<cd> data, std::span<const int> dims, Direction dir);

// Physical -> spectral for forward, spectral -> physical for inverse.
ScalarField transform(const ScalarField& field, Direction dir);
ScalarField to_spectral(const ScalarField& f);
ScalarField to_physical(const ScalarField& f);
ConormalField to_spectral(const ConormalField& f);
ConormalField to_physical(const ConormalField& f);

}  // namespace pdir
