#pragma once
#include <span>
#include <vector>

#include "fractime/half_derivative.hpp"

namespace pdir::fractime {

// Principal-value quadrature of the real-line kernel formula
//   D^{1/2}v(t)  = c * int (v(t)-v(s)) |t-s|^{-3/2} ds,
//   HD^{1/2}v(t) = c * int sgn(t-s)|t-s|^{-3/2} (v(t)-v(s)) ds,   c = 1/(2 sqrt(2 pi)),
// for samples extended by zero outside the window. Punctured trapezoid plus
// exact zeta tails for the zero extension and singular end corrections.
std::vector<cd> half_derivative_kernel_apply(std::span<const cd> samples, double dt, HalfVariant variant);

// Finite-difference weights (Fornberg) for the m-th derivative at x0.
std::vector<double> fd_weights(std::span<const double> nodes, double x0, int m);

// m-th derivative of zero-extended samples with a centered stencil of half width `half`.
std::vector<cd> centered_derivative(std::span<const cd> v, double h, int m, int half);

}  // namespace pdir::fractime
