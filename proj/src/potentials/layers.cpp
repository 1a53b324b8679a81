#include "potentials/layers.hpp"

#include "dirac/scales.hpp"
#include "potentials/extensions.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::potentials {

std::vector<ModeOperator> mode_operators(const dirac::DiracSymbolFamily& fam, Equation eq) {
    std::vector<ModeOperator> ops;
    const Grid& g = fam.grid();
    ops.reserve(g.points());
    for (std::size_t i = 0; i < g.points(); ++i) ops.emplace_back(g.frequency(i), fam.m(), fam.n(), eq);
    return ops;
}

namespace {

void check_scalar(const ScalarField& f, const dirac::SpectralProjectorSet& proj, const char* who) {
    if (!(f.grid() == proj.family().grid())) throw UsageError(std::string(who) + ": field grid does not match the family");
}

ScalarField restore_side(ScalarField s, Space side) { return side == Space::spectral ? s : to_physical(s); }

}  // namespace

LayerResult layer_potentials(const ScalarField& f, const dirac::SpectralProjectorSet& proj,
                             const std::vector<double>& nodes, LayerKind kind, HalfSpace side) {
    check_scalar(f, proj, "layer_potentials");
    check_nodes(nodes);
    const auto ops = mode_operators(proj.family());
    const ScalarField fs = to_spectral(f);
    const Grid& g = f.grid();
    const double sg = side == HalfSpace::upper ? 1.0 : -1.0;

    LayerResult out;
    out.values = ScalarProfile{nodes, side, {}};
    for (double l : nodes) {
        ScalarField v(g, Space::spectral);
        for (std::size_t i = 0; i < g.points(); ++i) {
            if (ops[i].zero_mode()) continue;
            const cd m = kind == LayerKind::single ? ops[i].single_layer(sg * l) : ops[i].double_layer(sg * l);
            v[i] = m * fs[i];
        }
        out.values.fields.push_back(restore_side(std::move(v), f.space()));
    }
    auto& t = out.traces;
    for (auto* x : {&t.S0, &t.D0_plus, &t.D0_minus, &t.dnS0_plus, &t.dnS0_minus, &t.dnD0, &t.K})
        *x = ScalarField(g, Space::spectral);
    for (std::size_t i = 0; i < g.points(); ++i) {
        const LayerTraces tr = ops[i].traces();
        t.S0[i] = tr.S0 * fs[i];
        t.D0_plus[i] = tr.D0_plus * fs[i];
        t.D0_minus[i] = tr.D0_minus * fs[i];
        t.dnS0_plus[i] = tr.dnS0_plus * fs[i];
        t.dnS0_minus[i] = tr.dnS0_minus * fs[i];
        t.dnD0[i] = tr.dnD0 * fs[i];
        t.K[i] = tr.K * fs[i];
    }
    for (auto* x : {&t.S0, &t.D0_plus, &t.D0_minus, &t.dnS0_plus, &t.dnS0_minus, &t.dnD0, &t.K})
        *x = restore_side(std::move(*x), f.space());
    return out;
}

ConormalProfile layer_conormal(const ScalarField& f, const dirac::SpectralProjectorSet& proj,
                               const std::vector<double>& nodes, LayerKind kind, HalfSpace side) {
    check_scalar(f, proj, "layer_conormal");
    check_nodes(nodes);
    const auto ops = mode_operators(proj.family());
    const ScalarField fs = to_spectral(f);
    const Grid& g = f.grid();
    const int d = proj.family().n() + 2;
    const double sg = side == HalfSpace::upper ? 1.0 : -1.0;
    ConormalProfile out{nodes, side, {}};
    for (double l : nodes) {
        std::vector<Vec> v(g.points(), Vec::Zero(d));
        for (std::size_t i = 0; i < g.points(); ++i) {
            if (ops[i].zero_mode()) continue;
            v[i] = (kind == LayerKind::single ? ops[i].single_layer_conormal(sg * l) : ops[i].double_layer_conormal(sg * l)) *
                   fs[i];
        }
        out.fields.push_back(dirac::from_modal_vectors(g, v, f.space()));
    }
    return out;
}

ScalarProfile greens_reconstruct(const ScalarField& u_trace, const ScalarField& conormal_trace,
                                 const dirac::SpectralProjectorSet& proj, const std::vector<double>& nodes,
                                 HalfSpace side) {
    check_scalar(u_trace, proj, "greens_reconstruct");
    check_scalar(conormal_trace, proj, "greens_reconstruct");
    check_nodes(nodes);
    const auto ops = mode_operators(proj.family());
    const ScalarField us = to_spectral(u_trace), cs = to_spectral(conormal_trace);
    const Grid& g = u_trace.grid();
    const double sg = side == HalfSpace::upper ? 1.0 : -1.0;
    ScalarProfile out{nodes, side, {}};
    for (double l : nodes) {
        ScalarField v(g, Space::spectral);
        for (std::size_t i = 0; i < g.points(); ++i) {
            if (ops[i].zero_mode()) {
                v[i] = us[i];
                continue;
            }
            v[i] = sg * (ops[i].single_layer(sg * l) * cs[i] - ops[i].double_layer(sg * l) * us[i]);
        }
        out.fields.push_back(restore_side(std::move(v), u_trace.space()));
    }
    return out;
}

}  // namespace pdir::potentials
