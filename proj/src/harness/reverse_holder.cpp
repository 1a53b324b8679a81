#include "harness/reverse_holder.hpp"

#include <algorithm>
#include <cmath>

#include "potentials/oracle.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::harness {

namespace {

struct IndexBox {
    std::size_t lo = 0, hi = 0;
    int rx = 0, rt = 0;
};

IndexBox index_box(const std::vector<double>& nodes, double lam, double r, double rt, const Grid& g) {
    IndexBox b;
    b.lo = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), lam - r * (1 + 1e-12)) - nodes.begin());
    b.hi = static_cast<std::size_t>(std::upper_bound(nodes.begin(), nodes.end(), lam + r * (1 + 1e-12)) - nodes.begin());
    b.rx = static_cast<int>(std::floor(r / g.dx() + 1e-12));
    b.rt = static_cast<int>(std::floor(rt / g.dt() + 1e-12));
    return b;
}

// sum and count of g^q over the box centered at (ix, it + shift)
std::pair<double, std::size_t> box_sum(const std::vector<std::vector<double>>& gvals, const IndexBox& b, const Grid& g,
                                       std::size_t center, int shift, int q) {
    const auto ix = g.spatial_index(center);
    const int it = g.time_index(center) + shift;
    double acc = 0.0;
    std::size_t count = 0;
    std::array<int, kMaxSpatialDim> off{};
    const int span = 2 * b.rx + 1;
    std::size_t spatial = 1;
    for (int a = 0; a < g.n; ++a) spatial *= static_cast<std::size_t>(span);
    for (std::size_t j = b.lo; j < b.hi; ++j)
        for (std::size_t sidx = 0; sidx < spatial; ++sidx) {
            std::size_t rem = sidx;
            std::array<int, kMaxSpatialDim> pos{};
            for (int a = 0; a < g.n; ++a) {
                off[static_cast<std::size_t>(a)] = static_cast<int>(rem % static_cast<std::size_t>(span)) - b.rx;
                rem /= static_cast<std::size_t>(span);
                pos[static_cast<std::size_t>(a)] = ((ix[static_cast<std::size_t>(a)] + off[static_cast<std::size_t>(a)]) % g.Nx + g.Nx) % g.Nx;
            }
            for (int dt = -b.rt; dt <= b.rt; ++dt) {
                const int tt = ((it + dt) % g.Nt + g.Nt) % g.Nt;
                const double v = gvals[j][g.flat(pos, tt)];
                acc += q == 2 ? v * v : v;
                ++count;
            }
        }
    return {acc, count};
}

}  // namespace

ReverseHolder reverse_holder_ratio(const ScalarProfile& u, const RegionSpec& region) {
    u.validate(3);
    const Grid& g = u.fields.front().grid();
    const double lam = region.lambda_c, r = region.radius_factor * lam;
    if (!(r > 0.0)) throw UsageError("reverse_holder_ratio: radius must be positive");
    if (region.point >= g.points()) throw UsageError("reverse_holder_ratio: center outside the grid");
    const double R = 8.0 * r, Rt = 64.0 * r * r;
    if (lam - R < u.nodes.front() || lam + R > u.nodes.back())
        throw DomainError("reverse_holder_ratio: enlarged region leaves the lambda node range");
    if (2.0 * R >= g.Lx || 2.0 * Rt >= g.Lt) throw DomainError("reverse_holder_ratio: enlarged region wraps the torus");

    const IndexBox small = index_box(u.nodes, lam, r, r * r, g);
    const IndexBox big = index_box(u.nodes, lam, R, Rt, g);
    if (small.hi <= small.lo) throw DomainError("reverse_holder_ratio: Whitney box holds no lambda node");

    // g on the nodes of the enlarged box
    const ScalarProfile du = lambda_derivative(u);
    std::vector<std::vector<double>> gv(u.size());
    for (std::size_t j = big.lo; j < big.hi; ++j) {
        const ScalarField uh = to_spectral(u.fields[j]);
        const ScalarField d = to_physical(du.fields[j]);
        std::vector<double> grad2(g.points());
        for (std::size_t p = 0; p < g.points(); ++p) grad2[p] = std::norm(d[p]);
        for (int k = 0; k < g.n; ++k) {
            const ScalarField gk = to_physical(apply_symbol(symbols::gradient(k), uh));
            for (std::size_t p = 0; p < g.points(); ++p) grad2[p] += std::norm(gk[p]);
        }
        const ScalarField hd = to_physical(apply_symbol(symbols::hilbert_half_derivative(), uh));
        const ScalarField dh = to_physical(apply_symbol(symbols::half_derivative(), uh));
        gv[j].resize(g.points());
        for (std::size_t p = 0; p < g.points(); ++p) gv[j][p] = std::sqrt(grad2[p]) + std::abs(hd[p]) + std::abs(dh[p]);
    }

    ReverseHolder out;
    const auto [s2, n2] = box_sum(gv, small, g, region.point, 0, 2);
    out.lhs = std::sqrt(s2 / static_cast<double>(n2));
    // translates by the length of the enlarged time window, kept disjoint on the torus
    const int step = 2 * big.rt + 1;
    const int K = std::max(0, (g.Nt / step - 1) / 2);
    for (int k = -K; k <= K; ++k) {
        const double w = region.unit_weights ? 1.0 : 1.0 / (1.0 + std::pow(std::abs(k), 1.5));
        const auto [s1, n1] = box_sum(gv, big, g, region.point, k * step, 1);
        out.rhs += w * s1 / static_cast<double>(n1);
    }
    out.translates = 2 * K + 1;
    // rounding noise of an (x,t)-constant solution counts as zero
    double umax = 0.0;
    for (std::size_t j = big.lo; j < big.hi; ++j)
        for (std::size_t p = 0; p < g.points(); ++p) umax = std::max(umax, std::abs(u.fields[j][p]));
    out.ratio = out.rhs > 1e-12 * umax / r ? out.lhs / out.rhs : 0.0;
    return out;
}

ScalarProfile dirichlet_extension(const dirac::Mat& A, const ScalarField& f, const std::vector<double>& nodes) {
    const Grid& g = f.grid();
    const ScalarField fh = to_spectral(f);
    std::vector<cd> rho(g.points(), 0.0);
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency q = g.frequency(i);
        if (q.is_zero()) continue;
        rho[i] = potentials::per_mode_bvp_oracle(A, q.xi, q.tau, potentials::DataKind::dirichlet, 1.0).rho;
    }
    ScalarProfile u;
    u.nodes = nodes;
    for (double lam : nodes) {
        ScalarField c(g, Space::spectral);
        for (std::size_t i = 0; i < g.points(); ++i) c[i] = fh[i] * std::exp(-rho[i] * lam);
        u.fields.push_back(to_physical(c));
    }
    return u;
}

}  // namespace pdir::harness
