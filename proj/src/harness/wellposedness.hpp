#pragma once
#include <string>
#include <vector>

#include "dirac/projectors.hpp"

namespace pdir::harness {

struct OperatorDiagnostic {
    std::string name;
    double inf = 0.0, sup = 0.0;
    std::size_t degenerate = 0;  // frequencies with singular value below the floor
    bool invertible = false;     // inf > floor
};

struct Wellposedness {
    double s = -0.5;
    double floor = 0.0;
    // 1+s_pp, 1-s_pp, s_pr, s_rp, 1+s_rr, 1-s_rr, then N_perp and N_r on the chi^+ range
    std::vector<OperatorDiagnostic> operators;
    // |sgn blocks - blocks assembled from layer traces|, worst over frequencies
    double layer_residual = 0.0;
    bool all_invertible() const;
    const OperatorDiagnostic& at(const std::string& name) const;
};

// Per-frequency singular values of the sgn(pm) block maps between H^s_P spaces at the
// nonzero lattice frequencies. Domain and target carry the same H^s weight per mode, so for
// constant coefficients the weighted values are the moduli of the scalar blocks.
Wellposedness wellposedness_diagnostics(const dirac::SpectralProjectorSet& proj, double s, double floor = 1e-6);

}  // namespace pdir::harness
