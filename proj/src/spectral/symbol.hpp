#pragma once
#include <functional>
#include <string>

#include "spectral/field.hpp"

namespace pdir {

// Scalar Fourier multiplier on the lattice. Powers use the principal branch
// (cut on (-inf, 0]). The value at (0,0) is never evaluated; it is supplied.
struct ParabolicSymbol {
    std::string name;
    std::function<cd(const Frequency&)> eval;
    cd at_origin{0.0, 0.0};
};

// Multiplies the spectral coefficients; the result is on the same side as the input.
ScalarField apply_symbol(const ParabolicSymbol& symbol, const ScalarField& field);

namespace symbols {

ParabolicSymbol one();
// (|xi|^2 + sign*i*tau)^s
ParabolicSymbol parabolic_power(double s, int sign = +1);
// i tau
ParabolicSymbol time_derivative();
// i xi_j
ParabolicSymbol gradient(int j);
// |tau|^{1/2}
ParabolicSymbol half_derivative();
// i sgn(tau) |tau|^{1/2}
ParabolicSymbol hilbert_half_derivative();
// i sgn(tau)
ParabolicSymbol hilbert();
// |tau|^alpha
ParabolicSymbol time_power(double alpha);
// (|xi| + |tau|^{1/2})^{-1}
ParabolicSymbol parabolic_riesz();

}  // namespace symbols

}  // namespace pdir
