#include "spectral/profile.hpp"

#include <cmath>

#include "spectral/errors.hpp"

namespace pdir {

template <class FieldT>
void Profile<FieldT>::validate(std::size_t min_nodes) const {
    if (nodes.size() < min_nodes)
        throw UsageError("profile: needs at least " + std::to_string(min_nodes) + " nodes");
    if (fields.size() != nodes.size()) throw UsageError("profile: node and field counts differ");
    for (std::size_t j = 1; j < nodes.size(); ++j)
        if (!(nodes[j] > nodes[j - 1])) throw UsageError("profile: nodes must be strictly increasing");
}

template struct Profile<ScalarField>;
template struct Profile<ConormalField>;

std::vector<double> geometric_nodes(double lmin, double ratio, double lmax) {
    if (!(lmin > 0.0) || !(ratio > 1.0) || !(lmax > lmin)) throw UsageError("geometric_nodes: bad parameters");
    std::vector<double> out;
    for (int j = 0;; ++j) {
        const double v = lmin * std::pow(ratio, j);
        if (v > lmax * (1.0 + 1e-12)) break;
        out.push_back(v);
    }
    return out;
}

std::vector<double> uniform_nodes(double a, double b, int count) {
    if (count < 2 || !(b > a)) throw UsageError("uniform_nodes: bad parameters");
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = a + (b - a) * j / (count - 1);
    return out;
}

StencilWeights derivative_stencil(const std::vector<double>& x, std::size_t j) {
    const std::size_t N = x.size();
    if (N < 2) throw UsageError("derivative_stencil: fewer than 2 nodes");
    if (N == 2) {
        const double h = x[1] - x[0];
        return {0, {-1.0 / h, 1.0 / h}};
    }
    if (j == 0) {
        const double h1 = x[1] - x[0], h2 = x[2] - x[1];
        return {0, {-(2 * h1 + h2) / (h1 * (h1 + h2)), (h1 + h2) / (h1 * h2), -h1 / (h2 * (h1 + h2))}};
    }
    if (j == N - 1) {
        const double h1 = x[N - 2] - x[N - 3], h2 = x[N - 1] - x[N - 2];
        return {N - 3, {h2 / (h1 * (h1 + h2)), -(h1 + h2) / (h1 * h2), (2 * h2 + h1) / (h2 * (h1 + h2))}};
    }
    const double h1 = x[j] - x[j - 1], h2 = x[j + 1] - x[j];
    return {j - 1, {-h2 / (h1 * (h1 + h2)), (h2 - h1) / (h1 * h2), h1 / (h2 * (h1 + h2))}};
}

std::vector<double> trapezoid_weights(const std::vector<double>& x) {
    std::vector<double> w(x.size(), 0.0);
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double h = x[j + 1] - x[j];
        w[j] += 0.5 * h;
        w[j + 1] += 0.5 * h;
    }
    return w;
}

ScalarProfile lambda_derivative(const ScalarProfile& u) {
    u.validate(2);
    ScalarProfile out{u.nodes, u.side, {}};
    const double sign = u.side == HalfSpace::upper ? 1.0 : -1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const auto st = derivative_stencil(u.nodes, j);
        ScalarField d(u.fields[j].grid(), u.fields[j].space());
        for (std::size_t k = 0; k < st.w.size(); ++k) d += cd(sign * st.w[k]) * u.fields[st.first + k];
        out.fields.push_back(std::move(d));
    }
    return out;
}

ConormalProfile lambda_derivative(const ConormalProfile& F) {
    F.validate(2);
    ConormalProfile out{F.nodes, F.side, {}};
    for (std::size_t j = 0; j < F.size(); ++j) {
        std::vector<ScalarField> comps;
        for (int c = 0; c < F.fields[j].ncomp(); ++c) {
            ScalarProfile s{F.nodes, F.side, {}};
            const auto st = derivative_stencil(F.nodes, j);
            ScalarField d(F.fields[j].grid(), F.fields[j].space());
            const double sign = F.side == HalfSpace::upper ? 1.0 : -1.0;
            for (std::size_t k = 0; k < st.w.size(); ++k) d += cd(sign * st.w[k]) * F.fields[st.first + k][c];
            comps.push_back(std::move(d));
        }
        out.fields.emplace_back(std::move(comps));
    }
    return out;
}

}  // namespace pdir
