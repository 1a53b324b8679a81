#pragma once
#include <span>
#include <vector>

#include "fractime/half_derivative.hpp"

namespace pdir::fractime {

// Modified Riesz potential of order 1/2 on windowed samples g_j at t_j = t0 + j*dt:
//   plain:   (2 pi)^{-1/2} int (|t-s|^{-1/2} - |s|^{-1/2} 1_{|s|>1}) g(s) ds
//   hilbert: -(2 pi)^{-1/2} int (sgn(t-s)|t-s|^{-1/2} - sgn(-s)|s|^{-1/2} 1_{|s|>1}) g(s) ds
// Multipliers |tau|^{-1/2} and i sgn(tau)|tau|^{-1/2}, up to the additive constant.
std::vector<cd> riesz_half_potential(std::span<const cd> g, double dt, double t0, HalfVariant variant);

// The subtracted constant, i.e. riesz_half_potential = unmodified potential - riesz_tail_constant.
cd riesz_tail_constant(std::span<const cd> g, double dt, double t0, HalfVariant variant);

// Spectral counterpart on a zero-padded window (tau = 0 mode dropped).
std::vector<cd> riesz_half_spectral(std::span<const cd> g, double dt, HalfVariant variant, int pad = 64);

}  // namespace pdir::fractime
