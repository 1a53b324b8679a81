#pragma once
#include <vector>

#include "spectral/profile.hpp"

namespace pdir::harness {

// Whitney region W(lambda, x, t) = [c0 lambda, c1 lambda] x B(x, c2 lambda) x [t - c3 lambda^2, t + c3 lambda^2],
// realized as an index box: lambda nodes in range, spatial index radius floor(c2 lambda / dx)
// per axis, time index radius floor(c3 lambda^2 / dt).
struct WhitneyConfig {
    double c0 = 1.0, c1 = 2.0, c2 = 1.0, c3 = 1.0;
    void validate() const;
};

// per (x,t): sup over admissible lambda nodes of (average of |F|^2 over W)^{1/2}, physical side
ScalarField nontangential_maximal(const ConormalProfile& F, const WhitneyConfig& cfg);
ScalarField nontangential_maximal(const ScalarProfile& F, const WhitneyConfig& cfg);

// per (x,t): average of |F - h(x,t)|^2 over the Whitney region at the smallest admissible lambda
ScalarField whitney_trace_deviation(const ConormalProfile& F, const ConormalField& h, const WhitneyConfig& cfg);

// lambda nodes whose window [c0 lambda, c1 lambda] lies inside the node range and holds a node
std::vector<std::size_t> admissible_centers(const std::vector<double>& nodes, const WhitneyConfig& cfg);

// Two-sided comparison of the non-tangential norm:
//   sup_lambda window_mass <= K1 ||N F||^2   and   ||N F||^2 <= K2 int ||F||^2 dlambda / lambda,
// where window_mass is the node average of ||F(lambda_i)||^2 over a Whitney window and the
// lambda integral is the log-trapezoid over the nodes. K1, K2 depend only on the node geometry.
struct Sandwich {
    double window_mass_sup = 0.0;
    double nt_norm2 = 0.0;
    double lambda_integral = 0.0;
    double K1 = 1.0, K2 = 0.0;
    bool lower_holds() const { return window_mass_sup <= K1 * nt_norm2 * (1.0 + 1e-12); }
    bool upper_holds() const { return nt_norm2 <= K2 * lambda_integral * (1.0 + 1e-12); }
};
double sandwich_constant_upper(const std::vector<double>& nodes, const WhitneyConfig& cfg);
Sandwich sandwich(const ConormalProfile& F, const WhitneyConfig& cfg);

// pointwise lower bound between configurations cfg_small contained in cfg_big:
// N_big >= factor * N_small with factor^2 the smallest box-volume ratio
double containment_factor(const std::vector<double>& nodes, const Grid& g, const WhitneyConfig& small,
                          const WhitneyConfig& big);

}  // namespace pdir::harness
