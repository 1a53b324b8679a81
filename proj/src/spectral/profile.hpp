#pragma once
#include <cstddef>
#include <vector>

#include "spectral/field.hpp"

namespace pdir {

enum class HalfSpace { upper, lower };

// Fields sampled at transversal nodes. nodes hold |lambda|; the signed
// transversal coordinate is +node on the upper side and -node on the lower side.
template <class FieldT>
struct Profile {
    std::vector<double> nodes;
    HalfSpace side = HalfSpace::upper;
    std::vector<FieldT> fields;

    std::size_t size() const { return nodes.size(); }
    double lambda(std::size_t j) const { return side == HalfSpace::upper ? nodes[j] : -nodes[j]; }
    void validate(std::size_t min_nodes) const;
};

using ScalarProfile = Profile<ScalarField>;
using ConormalProfile = Profile<ConormalField>;

// lambda_j = lmin * ratio^j for all j with lambda_j <= lmax (defaults 1e-3, 2^{1/4}, 1e2)
std::vector<double> geometric_nodes(double lmin = 1e-3, double ratio = 1.189207115002721, double lmax = 1e2);
std::vector<double> uniform_nodes(double a, double b, int count);

// Second-order finite-difference weights for d/dlambda at node j on a nonuniform grid.
// Returns (first index, weights) with weights applying to consecutive nodes.
struct StencilWeights {
    std::size_t first;
    std::vector<double> w;
};
StencilWeights derivative_stencil(const std::vector<double>& nodes, std::size_t j);

// Trapezoid weights for integrating over the node range.
std::vector<double> trapezoid_weights(const std::vector<double>& nodes);

ScalarProfile lambda_derivative(const ScalarProfile& u);
ConormalProfile lambda_derivative(const ConormalProfile& F);

}  // namespace pdir
