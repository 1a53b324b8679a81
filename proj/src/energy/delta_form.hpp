#pragma once
#include <random>

#include "dirac/coefficients.hpp"
#include "energy/slab.hpp"

namespace pdir::energy {

// a_delta(u, v) = <A grad u, grad (1 + delta H) v> + <H D^{1/2} u, D^{1/2} (1 + delta H) v>
// on the slab: P1 elements in lambda with two-point Gauss quadrature, spectral
// derivatives in (x,t), A applied pointwise. H has symbol i sgn(tau).
class DeltaForm {
public:
    DeltaForm(const dirac::CoefficientMatrix& A, const DiscreteSlab& slab, double delta);

    const DiscreteSlab& slab() const { return slab_; }
    const dirac::CoefficientMatrix& A() const { return A_; }
    double delta() const { return delta_; }

    cd operator()(const SlabFunction& u, const SlabFunction& v) const;
    // r with a_delta(u, v) = sum_i conj(v_i) r_i over all unknown nodes
    CVec apply(const CVec& u) const;

    // quadrature norms matching the form: ||grad_{lambda,x} u||^2 and ||H D^{1/2} u||^2
    double gradient_norm2(const SlabFunction& u) const;
    double hilbert_half_norm2(const SlabFunction& u) const;

    // mean of the coefficient samples
    const dirac::Mat& averaged_A() const { return Abar_; }

private:
    dirac::CoefficientMatrix A_;
    DiscreteSlab slab_;
    double delta_;
    dirac::Mat Abar_;
};

// Min over random trials of Re a(u,u) - (kappa - C delta)||grad u||^2 - delta ||H D^{1/2} u||^2,
// with each u scaled so ||grad u||^2 + ||H D^{1/2} u||^2 = 1.
double coercivity_margin(const dirac::CoefficientMatrix& A, const DiscreteSlab& slab, double delta, int trials,
                         std::mt19937_64& rng);

// kappa / (2C)
double default_delta(const dirac::CoefficientMatrix& A);

}  // namespace pdir::energy
