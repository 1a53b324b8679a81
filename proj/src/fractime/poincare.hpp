#pragma once
#include <cstddef>
#include <span>

#include "fractime/half_derivative.hpp"

namespace pdir::fractime {

// Half-open index interval [first, last) of a sample window.
struct IndexInterval {
    std::size_t first = 0;
    std::size_t last = 0;
    std::size_t length() const { return last - first; }
};

struct PoincareOptions {
    double alpha = 0.5;
    double p = 2.0;
    double q = 2.0;
    int N = 4;
    HalfVariant variant = HalfVariant::plain;
    int pad = 16;
};

// LHS/RHS of the fractional Poincare inequality
//   (avg_J |h - avg_J h|^p)^{1/p}  vs  |J|^alpha (sum_{l>=1} N^{(alpha-1)l} avg_{N^l J} |D^alpha h|^q)^{1/q},
// summing over all concentric dilates that fit in the window (at least two must fit).
// D^alpha is the padded spectral multiplier |tau|^alpha (or its Hilbert twin). 0/0 is reported as 0.
double fractional_poincare_ratio(std::span<const cd> h, double dt, IndexInterval J, const PoincareOptions& opt = {});

}  // namespace pdir::fractime
