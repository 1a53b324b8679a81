#include "harness/nontangential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::harness {

namespace {

constexpr double kNodeTol = 1e-12;

struct Box {
    std::size_t lo = 0, hi = 0;  // lambda node range [lo, hi)
    int rx = 0, rt = 0;
};

Box whitney_box(const std::vector<double>& nodes, std::size_t center, const WhitneyConfig& cfg, const Grid& g) {
    const double lam = nodes[center];
    Box b;
    b.lo = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), cfg.c0 * lam * (1.0 - kNodeTol)) - nodes.begin());
    b.hi = static_cast<std::size_t>(std::upper_bound(nodes.begin(), nodes.end(), cfg.c1 * lam * (1.0 + kNodeTol)) - nodes.begin());
    b.rx = static_cast<int>(std::floor(cfg.c2 * lam / g.dx() + kNodeTol));
    b.rt = static_cast<int>(std::floor(cfg.c3 * lam * lam / g.dt() + kNodeTol));
    return b;
}

std::size_t box_count(const Box& b, const Grid& g) {
    const auto width = [](int r, int N) { return static_cast<std::size_t>(std::min(2 * r + 1, N)); };
    std::size_t c = width(b.rt, g.Nt);
    for (int a = 0; a < g.n; ++a) c *= width(b.rx, g.Nx);
    return c;
}

// periodic moving average along one axis of a row-major (x_1..x_n, t) array
template <class T>
void axis_average(std::vector<T>& data, const Grid& g, int axis, int r) {
    const int N = axis == g.n ? g.Nt : g.Nx;
    if (r <= 0) return;
    std::size_t stride = 1;
    if (axis < g.n) {
        stride = static_cast<std::size_t>(g.Nt);
        for (int a = axis + 1; a < g.n; ++a) stride *= static_cast<std::size_t>(g.Nx);
    }
    const std::size_t total = data.size();
    const std::size_t block = stride * static_cast<std::size_t>(N);
    std::vector<T> line(static_cast<std::size_t>(N)), out(static_cast<std::size_t>(N));
    for (std::size_t base = 0; base < total; base += block)
        for (std::size_t off = 0; off < stride; ++off) {
            for (int i = 0; i < N; ++i) line[static_cast<std::size_t>(i)] = data[base + off + static_cast<std::size_t>(i) * stride];
            if (2 * r + 1 >= N) {
                T mean{};
                for (const auto& v : line) mean += v;
                mean /= static_cast<double>(N);
                std::fill(out.begin(), out.end(), mean);
            } else {
                T acc{};
                for (int k = -r; k <= r; ++k) acc += line[static_cast<std::size_t>((k + N) % N)];
                for (int i = 0; i < N; ++i) {
                    out[static_cast<std::size_t>(i)] = acc / static_cast<double>(2 * r + 1);
                    acc += line[static_cast<std::size_t>((i + r + 1) % N)];
                    acc -= line[static_cast<std::size_t>((i - r + N) % N)];
                }
            }
            for (int i = 0; i < N; ++i) data[base + off + static_cast<std::size_t>(i) * stride] = out[static_cast<std::size_t>(i)];
        }
}

template <class T>
void box_average(std::vector<T>& data, const Grid& g, const Box& b) {
    for (int a = 0; a < g.n; ++a) axis_average(data, g, a, b.rx);
    axis_average(data, g, g.n, b.rt);
}

// physical |F|^2 and components per node
struct Samples {
    Grid grid;
    std::vector<std::vector<double>> mod2;
    std::vector<std::vector<ScalarField>> comps;
};

Samples samples(const ConormalProfile& F, bool keep_components) {
    Samples s;
    s.grid = F.fields.front().grid();
    for (const auto& f : F.fields) {
        const ConormalField p = f.space() == Space::physical ? f : to_physical(f);
        std::vector<double> m(s.grid.points(), 0.0);
        std::vector<ScalarField> c;
        for (int k = 0; k < p.ncomp(); ++k) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += std::norm(p[k][i]);
            if (keep_components) c.push_back(p[k]);
        }
        s.mod2.push_back(std::move(m));
        s.comps.push_back(std::move(c));
    }
    return s;
}

ConormalProfile as_conormal(const ScalarProfile& F) {
    ConormalProfile c;
    c.nodes = F.nodes;
    c.side = F.side;
    for (const auto& f : F.fields) c.fields.push_back(ConormalField(std::vector<ScalarField>{f}));
    return c;
}

std::vector<double> window_average(const Samples& s, const Box& b) {
    std::vector<double> avg(s.grid.points(), 0.0);
    for (std::size_t i = b.lo; i < b.hi; ++i)
        for (std::size_t p = 0; p < avg.size(); ++p) avg[p] += s.mod2[i][p];
    for (auto& v : avg) v /= static_cast<double>(b.hi - b.lo);
    return avg;
}

}  // namespace

void WhitneyConfig::validate() const {
    if (!(c0 > 0.0 && c0 < c1)) throw UsageError("whitney config: need 0 < c0 < c1");
    if (!(c2 > 0.0 && c3 > 0.0)) throw UsageError("whitney config: c2 and c3 must be positive");
}

std::vector<std::size_t> admissible_centers(const std::vector<double>& nodes, const WhitneyConfig& cfg) {
    cfg.validate();
    std::vector<std::size_t> out;
    if (nodes.empty()) return out;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double lo = cfg.c0 * nodes[j], hi = cfg.c1 * nodes[j];
        if (lo < nodes.front() * (1.0 - kNodeTol) || hi > nodes.back() * (1.0 + kNodeTol)) continue;
        const auto first = std::lower_bound(nodes.begin(), nodes.end(), lo * (1.0 - kNodeTol));
        if (first != nodes.end() && *first <= hi * (1.0 + kNodeTol)) out.push_back(j);
    }
    return out;
}

ScalarField nontangential_maximal(const ConormalProfile& F, const WhitneyConfig& cfg) {
    F.validate(2);
    const auto centers = admissible_centers(F.nodes, cfg);
    if (centers.empty()) throw UsageError("nontangential_maximal: nodes do not cover any Whitney window");
    const Samples s = samples(F, false);
    std::vector<double> best(s.grid.points(), 0.0);
    for (std::size_t c : centers) {
        const Box b = whitney_box(F.nodes, c, cfg, s.grid);
        auto avg = window_average(s, b);
        box_average(avg, s.grid, b);
        for (std::size_t p = 0; p < best.size(); ++p) best[p] = std::max(best[p], avg[p]);
    }
    ScalarField out(s.grid);
    for (std::size_t p = 0; p < best.size(); ++p) out[p] = std::sqrt(best[p]);
    return out;
}

ScalarField nontangential_maximal(const ScalarProfile& F, const WhitneyConfig& cfg) {
    return nontangential_maximal(as_conormal(F), cfg);
}

ScalarField whitney_trace_deviation(const ConormalProfile& F, const ConormalField& h, const WhitneyConfig& cfg) {
    F.validate(2);
    const auto centers = admissible_centers(F.nodes, cfg);
    if (centers.empty()) throw UsageError("whitney_trace_deviation: nodes do not cover any Whitney window");
    if (h.ncomp() != F.fields.front().ncomp()) throw UsageError("whitney_trace_deviation: component count mismatch");
    const Samples s = samples(F, true);
    const ConormalField hp = h.space() == Space::physical ? h : to_physical(h);
    const Box b = whitney_box(F.nodes, centers.front(), cfg, s.grid);
    const std::size_t P = s.grid.points();
    // avg |F - h0|^2 = avg |F|^2 - 2 Re conj(h0) avg F + |h0|^2
    auto mod2 = window_average(s, b);
    box_average(mod2, s.grid, b);
    std::vector<double> dev = mod2;
    for (int k = 0; k < hp.ncomp(); ++k) {
        std::vector<cd> mean(P, 0.0);
        for (std::size_t i = b.lo; i < b.hi; ++i)
            for (std::size_t p = 0; p < P; ++p) mean[p] += s.comps[i][static_cast<std::size_t>(k)][p];
        for (auto& v : mean) v /= static_cast<double>(b.hi - b.lo);
        box_average(mean, s.grid, b);
        for (std::size_t p = 0; p < P; ++p)
            dev[p] += std::norm(hp[k][p]) - 2.0 * (std::conj(hp[k][p]) * mean[p]).real();
    }
    ScalarField out(s.grid);
    for (std::size_t p = 0; p < P; ++p) out[p] = std::max(dev[p], 0.0);
    return out;
}

double sandwich_constant_upper(const std::vector<double>& nodes, const WhitneyConfig& cfg) {
    const auto centers = admissible_centers(nodes, cfg);
    if (centers.empty() || nodes.size() < 2) throw UsageError("sandwich: no admissible Whitney window");
    // ||N F||^2 <= sum_centers window_mass(center) = sum_i c_i ||F_i||^2
    std::vector<double> c(nodes.size(), 0.0);
    for (std::size_t j : centers) {
        const double lam = nodes[j];
        const auto lo = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), cfg.c0 * lam * (1.0 - kNodeTol)) - nodes.begin());
        const auto hi = static_cast<std::size_t>(std::upper_bound(nodes.begin(), nodes.end(), cfg.c1 * lam * (1.0 + kNodeTol)) - nodes.begin());
        for (std::size_t i = lo; i < hi; ++i) c[i] += 1.0 / static_cast<double>(hi - lo);
    }
    // log-trapezoid weights
    std::vector<double> w(nodes.size(), 0.0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double d = 0.5 * std::log(nodes[i] / nodes[i - 1]);
        w[i - 1] += d;
        w[i] += d;
    }
    double K = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (c[i] > 0.0) K = std::max(K, c[i] / w[i]);
    return K;
}

Sandwich sandwich(const ConormalProfile& F, const WhitneyConfig& cfg) {
    F.validate(2);
    Sandwich r;
    const Samples s = samples(F, false);
    const double vol = s.grid.cell_volume();
    std::vector<double> mass(F.size());
    for (std::size_t i = 0; i < F.size(); ++i) {
        double acc = 0.0;
        for (double v : s.mod2[i]) acc += v;
        mass[i] = vol * acc;
    }
    for (std::size_t j : admissible_centers(F.nodes, cfg)) {
        const Box b = whitney_box(F.nodes, j, cfg, s.grid);
        double m = 0.0;
        for (std::size_t i = b.lo; i < b.hi; ++i) m += mass[i];
        r.window_mass_sup = std::max(r.window_mass_sup, m / static_cast<double>(b.hi - b.lo));
    }
    const double nt = nontangential_maximal(F, cfg).norm();
    r.nt_norm2 = nt * nt;
    for (std::size_t i = 1; i < F.size(); ++i)
        r.lambda_integral += 0.5 * (mass[i] + mass[i - 1]) * std::log(F.nodes[i] / F.nodes[i - 1]);
    r.K1 = 1.0;
    r.K2 = sandwich_constant_upper(F.nodes, cfg);
    return r;
}

double containment_factor(const std::vector<double>& nodes, const Grid& g, const WhitneyConfig& small,
                          const WhitneyConfig& big) {
    if (big.c0 > small.c0 || big.c1 < small.c1 || big.c2 < small.c2 || big.c3 < small.c3)
        throw UsageError("containment_factor: regions are not nested");
    double worst = std::numeric_limits<double>::infinity();
    const auto cs = admissible_centers(nodes, small);
    const auto cb = admissible_centers(nodes, big);
    for (std::size_t j : cs) {
        if (std::find(cb.begin(), cb.end(), j) == cb.end()) return 0.0;
        const Box a = whitney_box(nodes, j, small, g), b = whitney_box(nodes, j, big, g);
        const double ratio = static_cast<double>((a.hi - a.lo) * box_count(a, g)) /
                             static_cast<double>((b.hi - b.lo) * box_count(b, g));
        worst = std::min(worst, ratio);
    }
    return std::sqrt(worst);
}

}  // namespace pdir::harness
