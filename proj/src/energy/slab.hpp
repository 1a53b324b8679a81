#pragma once
#include <Eigen/Dense>
#include <random>
#include <vector>

#include "spectral/field.hpp"

namespace pdir::energy {

using CVec = Eigen::VectorXcd;

// (x,t) torus times [0, Lambda] with uniform nodes lambda_j = j h, j = 0..Nlambda.
// Node 0 carries the boundary trace; node Nlambda is held at zero.
struct DiscreteSlab {
    Grid base;
    double Lambda = 8.0;
    int Nlambda = 64;

    void validate() const;
    double h() const { return Lambda / Nlambda; }
    double node(int j) const { return j * h(); }
    // unknown nodes 0..Nlambda-1
    std::size_t dof() const { return static_cast<std::size_t>(Nlambda) * base.points(); }
};

// Physical samples per node 0..Nlambda-1; the cap node is implicit zero.
struct SlabFunction {
    std::vector<ScalarField> nodes;

    static SlabFunction zeros(const DiscreteSlab& s);
    CVec to_vector() const;
    static SlabFunction from_vector(const DiscreteSlab& s, const CVec& v);
    // L^2 over the slab by the trapezoid rule in lambda
    double norm(const DiscreteSlab& s) const;
};

// Random function with band-limited (x,t) content (|k|, |m| <= band) and random
// node values; vanishes at the cap.
SlabFunction random_slab_function(const DiscreteSlab& s, std::mt19937_64& rng, int band = 2);

}  // namespace pdir::energy
