#include "harness/square_function.hpp"

#include <cmath>

#include "dirac/scales.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::harness {

namespace {

void check_s(double s) {
    if (!(s >= -1.0 && s <= 0.0)) throw UsageError("square_function: weight exponent must lie in [-1, 0]");
}

}  // namespace

double square_function(const ConormalProfile& F, double s) {
    check_s(s);
    F.validate(kMinSquareFunctionNodes);
    return square_function(F, lambda_derivative(F), s);
}

double square_function(const ConormalProfile& F, const ConormalProfile& dF, double s) {
    check_s(s);
    F.validate(kMinSquareFunctionNodes);
    if (dF.nodes != F.nodes) throw UsageError("square_function: derivative profile on other nodes");
    const std::size_t J = F.size();
    const double p = 2.0 - 2.0 * s;
    std::vector<double> g(J);
    for (std::size_t j = 0; j < J; ++j) {
        const double nrm = dF.fields[j].norm();
        g[j] = std::pow(F.nodes[j], p) * nrm * nrm;
    }
    double acc = g[0] / p;
    for (std::size_t j = 1; j < J; ++j)
        acc += 0.5 * (g[j] + g[j - 1]) * std::log(F.nodes[j] / F.nodes[j - 1]);
    return acc;
}

ConormalProfile extension_derivative(const ConormalProfile& F, const dirac::DiracSymbolFamily& fam) {
    ConormalProfile d;
    d.nodes = F.nodes;
    d.side = F.side;
    const double sign = F.side == HalfSpace::upper ? -1.0 : 1.0;
    const Grid& g = fam.grid();
    std::vector<dirac::Mat> pm(g.points());
    for (std::size_t i = 0; i < g.points(); ++i) pm[i] = fam.mode(i).pm;
    for (const auto& field : F.fields) {
        auto v = dirac::modal_vectors(field);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = sign * (pm[i] * v[i]);
        d.fields.push_back(dirac::from_modal_vectors(g, v, field.space()));
    }
    return d;
}

double square_function_mode(cd m, double s) {
    check_s(s);
    if (!(m.real() > 0.0)) throw DomainError("square_function_mode: Re m must be positive");
    return std::norm(m) * std::tgamma(2.0 - 2.0 * s) / std::pow(2.0 * m.real(), 2.0 - 2.0 * s);
}

}  // namespace pdir::harness
