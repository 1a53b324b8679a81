#include "energy/delta_form.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::energy {

namespace {

const double kGauss[2] = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};

struct QuadPoint {
    ScalarField Uhat;              // spectral value at the Gauss point
    std::vector<ScalarField> g;    // physical (d_lambda u, grad_x u)
};

QuadPoint quad_point(const ScalarField& a, const ScalarField& b, double s, double h) {
    const Grid& grid = a.grid();
    QuadPoint q;
    const ScalarField U = cd(1.0 - s) * a + cd(s) * b;
    q.Uhat = to_spectral(U);
    q.g.push_back(cd(1.0 / h) * (b - a));
    for (int k = 0; k < grid.n; ++k) q.g.push_back(to_physical(apply_symbol(symbols::gradient(k), q.Uhat)));
    return q;
}

// multiplier 1 + sign * delta * i sgn(tau)
ScalarField hilbert_shift(const ScalarField& f, double delta, double sign) {
    const ParabolicSymbol sym{"1+dH", [=](const Frequency& q) { return cd(1.0, sign * delta * q.sgn_tau()); }, 1.0};
    return apply_symbol(sym, f);
}

std::vector<ScalarField> flux(const dirac::CoefficientMatrix& A, const std::vector<ScalarField>& g) {
    const std::size_t P = g.front().size();
    const int d = static_cast<int>(g.size());
    std::vector<ScalarField> out(static_cast<std::size_t>(d), ScalarField(g.front().grid()));
    for (std::size_t i = 0; i < P; ++i) {
        const dirac::Mat& a = A.at(i);
        for (int r = 0; r < d; ++r) {
            cd acc = 0.0;
            for (int c = 0; c < d; ++c) acc += a(r, c) * g[static_cast<std::size_t>(c)][i];
            out[static_cast<std::size_t>(r)][i] = acc;
        }
    }
    return out;
}

cd inner(const ScalarField& a, const ScalarField& b) {
    cd acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    return acc;
}

}  // namespace

DeltaForm::DeltaForm(const dirac::CoefficientMatrix& A, const DiscreteSlab& slab, double delta)
    : A_(A), slab_(slab), delta_(delta) {
    slab_.validate();
    if (delta < 0.0) throw UsageError("delta form: delta must be non-negative");
    if (A.n() != slab.base.n) throw UsageError("delta form: coefficient dimension does not match the slab");
    if (!A.is_constant() && !(A.grid() == slab.base)) throw UsageError("delta form: coefficients sampled on another grid");
    Abar_ = dirac::Mat::Zero(A.n() + 1, A.n() + 1);
    for (std::size_t i = 0; i < A.sample_count(); ++i) Abar_ += A.at(i);
    Abar_ /= static_cast<double>(A.sample_count());
}

cd DeltaForm::operator()(const SlabFunction& u, const SlabFunction& v) const {
    const int J = slab_.Nlambda;
    const double h = slab_.h();
    const ScalarField zero(slab_.base);
    std::vector<ScalarField> w;
    w.reserve(v.nodes.size());
    for (const auto& x : v.nodes) w.push_back(hilbert_shift(x, delta_, 1.0));
    cd acc = 0.0;
    for (int e = 0; e < J; ++e) {
        const auto& u0 = u.nodes[static_cast<std::size_t>(e)];
        const auto& u1 = e + 1 < J ? u.nodes[static_cast<std::size_t>(e + 1)] : zero;
        const auto& w0 = w[static_cast<std::size_t>(e)];
        const auto& w1 = e + 1 < J ? w[static_cast<std::size_t>(e + 1)] : zero;
        for (double s : kGauss) {
            const QuadPoint qu = quad_point(u0, u1, s, h), qw = quad_point(w0, w1, s, h);
            const auto fl = flux(A_, qu.g);
            cd term = 0.0;
            for (std::size_t c = 0; c < fl.size(); ++c) term += inner(fl[c], qw.g[c]);
            const Grid& g = slab_.base;
            for (std::size_t i = 0; i < g.points(); ++i)
                term += cd(0.0, g.frequency(i).tau) * qu.Uhat[i] * std::conj(qw.Uhat[i]);
            acc += 0.5 * h * term;
        }
    }
    return acc * slab_.base.cell_volume();
}

CVec DeltaForm::apply(const CVec& uvec) const {
    const SlabFunction u = SlabFunction::from_vector(slab_, uvec);
    const int J = slab_.Nlambda;
    const double h = slab_.h();
    const Grid& g = slab_.base;
    const ScalarField zero(g);
    std::vector<ScalarField> out(static_cast<std::size_t>(J), ScalarField(g));
    for (int e = 0; e < J; ++e) {
        const auto& u0 = u.nodes[static_cast<std::size_t>(e)];
        const auto& u1 = e + 1 < J ? u.nodes[static_cast<std::size_t>(e + 1)] : zero;
        for (double s : kGauss) {
            const QuadPoint q = quad_point(u0, u1, s, h);
            const auto fl = flux(A_, q.g);
            // spectral coefficient of conj(V): i tau U - sum_k i xi_k flux_k
            ScalarField Rh(g, Space::spectral);
            for (std::size_t i = 0; i < g.points(); ++i) Rh[i] = cd(0.0, g.frequency(i).tau) * q.Uhat[i];
            for (int k = 0; k < g.n; ++k) {
                const ScalarField fk = to_spectral(fl[static_cast<std::size_t>(k + 1)]);
                for (std::size_t i = 0; i < g.points(); ++i)
                    Rh[i] -= cd(0.0, g.frequency(i).xi[static_cast<std::size_t>(k)]) * fk[i];
            }
            const ScalarField R = to_physical(Rh);
            const double wq = 0.5 * h;
            out[static_cast<std::size_t>(e)] += cd(wq) * (cd(1.0 - s) * R - cd(1.0 / h) * fl[0]);
            if (e + 1 < J) out[static_cast<std::size_t>(e + 1)] += cd(wq) * (cd(s) * R + cd(1.0 / h) * fl[0]);
        }
    }
    SlabFunction r;
    r.nodes.reserve(out.size());
    for (auto& x : out) r.nodes.push_back(cd(g.cell_volume()) * hilbert_shift(x, delta_, -1.0));
    return r.to_vector();
}

double DeltaForm::gradient_norm2(const SlabFunction& u) const {
    const int J = slab_.Nlambda;
    const double h = slab_.h();
    const ScalarField zero(slab_.base);
    double acc = 0.0;
    for (int e = 0; e < J; ++e) {
        const auto& u1 = e + 1 < J ? u.nodes[static_cast<std::size_t>(e + 1)] : zero;
        for (double s : kGauss) {
            const QuadPoint q = quad_point(u.nodes[static_cast<std::size_t>(e)], u1, s, h);
            for (const auto& c : q.g) acc += 0.5 * h * std::pow(c.norm(), 2);
        }
    }
    return acc;
}

double DeltaForm::hilbert_half_norm2(const SlabFunction& u) const {
    const int J = slab_.Nlambda;
    const double h = slab_.h();
    const Grid& g = slab_.base;
    const ScalarField zero(g);
    double acc = 0.0;
    for (int e = 0; e < J; ++e) {
        const auto& u1 = e + 1 < J ? u.nodes[static_cast<std::size_t>(e + 1)] : zero;
        for (double s : kGauss) {
            const QuadPoint q = quad_point(u.nodes[static_cast<std::size_t>(e)], u1, s, h);
            double m = 0.0;
            for (std::size_t i = 0; i < g.points(); ++i) m += std::abs(g.frequency(i).tau) * std::norm(q.Uhat[i]);
            acc += 0.5 * h * m * g.cell_volume();
        }
    }
    return acc;
}

double coercivity_margin(const dirac::CoefficientMatrix& A, const DiscreteSlab& slab, double delta, int trials,
                         std::mt19937_64& rng) {
    if (trials < 1) throw UsageError("coercivity_margin: trials must be positive");
    const DeltaForm form(A, slab, delta);
    const double kappa = A.kappa(), C = A.Cbound();
    double worst = INFINITY;
    for (int t = 0; t < trials; ++t) {
        SlabFunction u = random_slab_function(slab, rng);
        const double scale = form.gradient_norm2(u) + form.hilbert_half_norm2(u);
        if (!(scale > 0.0)) continue;
        for (auto& x : u.nodes) x *= cd(1.0 / std::sqrt(scale));
        const double m = form(u, u).real() - (kappa - C * delta) * form.gradient_norm2(u) - delta * form.hilbert_half_norm2(u);
        worst = std::min(worst, m);
    }
    return worst;
}

double default_delta(const dirac::CoefficientMatrix& A) { return A.kappa() / (2.0 * A.Cbound()); }

}  // namespace pdir::energy
