#pragma once
#include "dirac/symbol_family.hpp"
#include "spectral/profile.hpp"

namespace pdir::harness {

inline constexpr std::size_t kMinSquareFunctionNodes = 16;

// int_0^inf || lambda^{-s} lambda d_lambda F ||_2^2 dlambda / lambda, s in [-1, 0].
// Trapezoid in log(lambda) over the nodes plus the power-law head below the first node.
// The derivative is taken by node finite differences.
double square_function(const ConormalProfile& F, double s);
// Same with an explicitly supplied derivative profile d F / d|lambda|.
double square_function(const ConormalProfile& F, const ConormalProfile& dF, double s);

// Exact d F / d|lambda| of an extension profile: -pm F on the upper side, +pm F on the lower.
ConormalProfile extension_derivative(const ConormalProfile& F, const dirac::DiracSymbolFamily& fam);

// int_0^inf lambda^{1-2s} |m|^2 e^{-2 lambda Re m} dlambda
double square_function_mode(cd m, double s);

}  // namespace pdir::harness
