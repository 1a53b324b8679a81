#pragma once
#include <cstddef>

#include "dirac/coefficients.hpp"
#include "spectral/profile.hpp"

namespace pdir::harness {

// Whitney box W centered at (lambda_c, x, t) with radius r = radius_factor * lambda_c:
// lambda in [lambda_c - r, lambda_c + r], |y - x| <= r per axis, |s - t| <= r^2.
// The enlargement 8W scales the lambda and spatial radii by 8 and the time radius by 64.
struct RegionSpec {
    double lambda_c = 1.0;
    std::size_t point = 0;  // flat (x,t) index of the center
    double radius_factor = 1.0 / 16.0;
    bool unit_weights = false;  // replace (1 + |k|^{3/2})^{-1} by 1
};

struct ReverseHolder {
    double lhs = 0.0;  // (average over W of g^2)^{1/2}
    double rhs = 0.0;  // sum_k w_k average over 8W + k shifts of g
    double ratio = 0.0;
    int translates = 0;
};

// g = |grad_{lambda,x} u| + |H D^{1/2} u| + |D^{1/2} u|. Throws DomainError when 8W
// leaves the node range or wraps the torus.
ReverseHolder reverse_holder_ratio(const ScalarProfile& u, const RegionSpec& region);

// Per-mode decaying solution u(lambda) = f_hat e^{-rho lambda} for constant coefficients,
// the (0,0) mode carried as a constant.
ScalarProfile dirichlet_extension(const dirac::Mat& A, const ScalarField& f, const std::vector<double>& nodes);

}  // namespace pdir::harness
