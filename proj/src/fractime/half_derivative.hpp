#pragma once
#include <functional>
#include <span>
#include <vector>

#include "spectral/field.hpp"

namespace pdir::fractime {

enum class HalfVariant { plain, hilbert };

// |tau|^{1/2} (plain) or i sgn(tau)|tau|^{1/2} (hilbert); kills the tau = 0 plane.
ScalarField half_derivative(const ScalarField& field, HalfVariant variant);
// i sgn(tau)
ScalarField hilbert_transform(const ScalarField& field);
// (|xi| + |tau|^{1/2})^{-1} on nonzero modes, 0 at the origin
ScalarField parabolic_riesz_potential(const ScalarField& g);

// Line multiplier on windowed samples: zero-pads by `pad`, multiplies by
// symbol(tau) with tau the padded lattice, and returns the first samples.size() values.
std::vector<cd> line_multiplier(std::span<const cd> samples, double dt, const std::function<cd(double)>& symbol,
                                int pad = 64);
std::vector<cd> half_derivative_spectral(std::span<const cd> samples, double dt, HalfVariant variant, int pad = 64);

}  // namespace pdir::fractime
