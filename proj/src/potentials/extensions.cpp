#include "potentials/extensions.hpp"

#include <string>

#include "dirac/scales.hpp"
#include "spectral/errors.hpp"

namespace pdir::potentials {

using dirac::Mat;
using dirac::Vec;
using dirac::matrix_function;
namespace funcs = dirac::funcs;

void BoundaryDatum::validate(double tol) const {
    if (s < -1.0 || s > 0.0) throw UsageError("boundary datum: regularity must lie in [-1, 0]");
    const double r = value.compatibility_residual();
    if (r > tol) throw DomainError("boundary datum: not in ran(P), residual " + std::to_string(r));
}

void check_nodes(const std::vector<double>& nodes) {
    if (nodes.empty()) throw UsageError("transversal nodes: empty");
    if (!(nodes.front() > 0.0)) throw UsageError("transversal nodes: must be positive");
    for (std::size_t j = 1; j < nodes.size(); ++j)
        if (!(nodes[j] > nodes[j - 1])) throw UsageError("transversal nodes: must be strictly increasing");
}

namespace {

template <class MakeMatrix>
ConormalProfile extend(const ConormalField& h, const dirac::DiracSymbolFamily& fam, const std::vector<double>& nodes,
                       HalfSpace side, MakeMatrix make) {
    if (h.ncomp() != fam.n() + 2 || !(h.grid() == fam.grid()))
        throw UsageError("extension: datum does not match the symbol family");
    check_nodes(nodes);
    const auto v = dirac::modal_vectors(h);
    const std::size_t N = v.size();
    std::vector<std::vector<Vec>> slices(nodes.size(), std::vector<Vec>(N));
    for (std::size_t i = 0; i < N; ++i) {
        const auto ms = fam.mode(i);
        const std::string where = dirac::describe(ms.f, fam.n());
        for (std::size_t j = 0; j < nodes.size(); ++j) slices[j][i] = make(ms, nodes[j], where) * v[i];
    }
    ConormalProfile F{nodes, side, {}};
    F.fields.reserve(nodes.size());
    for (auto& s : slices) F.fields.push_back(dirac::from_modal_vectors(h.grid(), s, h.space()));
    return F;
}

}  // namespace

ConormalProfile cauchy_extension(const BoundaryDatum& h, const dirac::SpectralProjectorSet& proj,
                                 const std::vector<double>& nodes) {
    h.validate();
    const bool upper = h.side == HalfSpace::upper;
    const int d = proj.family().n() + 2;
    return extend(h.value, proj.family(), nodes, h.side, [&](const dirac::ModeSymbols& ms, double l, const std::string& w) {
        if (ms.f.is_zero()) return Mat(Mat::Zero(d, d));
        return matrix_function(ms.pm, upper ? funcs::exp_chi_plus(l) : funcs::exp_chi_minus(l), w);
    });
}

ConormalProfile semigroup_extension(const ConormalField& h, const dirac::DiracSymbolFamily& fam, Operand operand,
                                    const std::vector<double>& nodes, HalfSpace side) {
    return extend(h, fam, nodes, side, [&](const dirac::ModeSymbols& ms, double l, const std::string& w) {
        return matrix_function(operand == Operand::pm ? ms.pm : ms.mp, funcs::exp_bracket(l), w);
    });
}

}  // namespace pdir::potentials
