#pragma once
#include "spectral/field.hpp"
#include "spectral/profile.hpp"

namespace pdir {

// L^2(torus) norm of (|xi|^2 + sign*i*tau)^s applied to the field.
// For s < 0 the (0,0) coefficient is dropped; for s = 0 it is kept.
double parabolic_sobolev_norm(const ScalarField& field, double s, int sign = +1);

// (||grad_{lambda,x} u||^2 + ||H D^{1/2} u||^2)^{1/2} over the slab spanned by the
// profile nodes: spectral derivatives in (x,t), finite differences and trapezoid in lambda.
double energy_norm(const ScalarProfile& u);

}  // namespace pdir
