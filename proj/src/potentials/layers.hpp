#pragma once
#include <vector>

#include "dirac/projectors.hpp"
#include "potentials/modal.hpp"
#include "spectral/profile.hpp"

namespace pdir::potentials {

enum class LayerKind { single, double_layer };

struct LayerTraceFields {
    ScalarField S0, D0_plus, D0_minus;
    ScalarField dnS0_plus, dnS0_minus, dnD0;
    ScalarField K;
};

struct LayerResult {
    ScalarProfile values;
    LayerTraceFields traces;
};

// Per-mode layer operators for the coefficients of the family.
std::vector<ModeOperator> mode_operators(const dirac::DiracSymbolFamily& fam, Equation eq = Equation::forward);

// S_lambda f or D_lambda f on the chosen side, plus every boundary trace applied to f.
LayerResult layer_potentials(const ScalarField& f, const dirac::SpectralProjectorSet& proj,
                             const std::vector<double>& nodes, LayerKind kind, HalfSpace side);

// D_A S_lambda f or D_A D_lambda f on the chosen side.
ConormalProfile layer_conormal(const ScalarField& f, const dirac::SpectralProjectorSet& proj,
                               const std::vector<double>& nodes, LayerKind kind, HalfSpace side);

// u(lambda) = S_lambda(conormal) - D_lambda(u_trace) + c on the upper side, with both
// signs flipped on the lower side. c is chosen so the (0,0) mode equals that of u_trace.
ScalarProfile greens_reconstruct(const ScalarField& u_trace, const ScalarField& conormal_trace,
                                 const dirac::SpectralProjectorSet& proj, const std::vector<double>& nodes,
                                 HalfSpace side = HalfSpace::upper);

}  // namespace pdir::potentials
