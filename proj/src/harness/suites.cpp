#include "harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>

#include "dirac/scales.hpp"
#include "energy/kato.hpp"
#include "energy/solver.hpp"
#include "fractime/half_derivative.hpp"
#include "fractime/kernels.hpp"
#include "harness/nontangential.hpp"
#include "harness/rellich.hpp"
#include "harness/reverse_holder.hpp"
#include "harness/square_function.hpp"
#include "harness/wellposedness.hpp"
#include "potentials/dtn.hpp"
#include "potentials/extensions.hpp"
#include "potentials/inverse.hpp"
#include "potentials/layers.hpp"
#include "potentials/modal.hpp"
#include "potentials/oracle.hpp"
#include "potentials/reconstruct.hpp"
#include "spectral/fft.hpp"

namespace pdir::harness {

namespace {

using dirac::Mat;
using dirac::Vec;
constexpr double kInf = std::numeric_limits<double>::infinity();

Band at_most(double tol) { return {-kInf, tol}; }
Band at_least(double tol) { return {tol, kInf}; }

// FNV-1a, stable across platforms
std::uint32_t name_hash(const std::string& s) {
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) h = (h ^ c) * 16777619u;
    return h;
}

std::mt19937_64 suite_rng(const Config& cfg, const std::string& name) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), name_hash(name)};
    return std::mt19937_64(seq);
}

// heat followed by random elliptic constant coefficients
std::vector<Mat> coefficient_set(const Config& cfg, int n, std::mt19937_64& rng) {
    std::vector<Mat> out{dirac::identity_coefficients(n)};
    for (int i = 0; i < cfg.coefficient_samples; ++i) out.push_back(dirac::random_elliptic(n, rng));
    return out;
}

double max_abs_diff(std::span<const cd> a, std::span<const cd> b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return std::sqrt(num / den);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// ---------------------------------------------------------------- calculus

void calculus(const Config& cfg, Calibration&, VerificationReport& r, std::mt19937_64& rng) {
    double hat = 0.0;
    for (int t = 0; t < 10 * cfg.coefficient_samples; ++t) {
        const Mat B = dirac::random_elliptic(1 + t % 2, rng);
        hat = std::max(hat, (dirac::hat_transform(dirac::hat_transform(B)) - B).cwiseAbs().maxCoeff());
    }
    r.add("calculus/hat_involution", hat, at_most(1e-12), "exact");

    const Grid g = cfg.grid.make();
    double sq = 0.0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency f = g.frequency(i);
        const Mat p = dirac::dirac_symbol(f, g.n);
        const Mat pi = f.is_zero() ? Mat::Zero(p.rows(), p.cols()) : dirac::matrix_function(p, dirac::funcs::range_indicator());
        sq = std::max(sq, (p * p - f.parabolic() * pi).norm() / std::max(1.0, std::abs(f.parabolic())));
    }
    r.add("calculus/symbol_square", sq, at_most(1e-10), "exact");

    double alg = 0.0;
    for (const Mat& A : coefficient_set(cfg, g.n, rng)) {
        const dirac::SpectralProjectorSet proj(dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(A)));
        alg = std::max(alg, proj.algebra_residual());
    }
    r.add("calculus/projector_algebra", alg, at_most(1e-10), "exact");
    const dirac::SpectralProjectorSet block(
        dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(dirac::random_block_elliptic(g.n, rng))));
    r.add("calculus/block_diagonal_vanishing", block.diagonal_block_size(), at_most(1e-10), "exact");

    // potential reconstruction of Cauchy extensions
    const auto nodes = geometric_nodes(1e-2, 1.5, 10.0);
    double rec = 0.0;
    for (const Mat& A : coefficient_set(cfg, g.n, rng)) {
        const auto coeff = dirac::CoefficientMatrix::constant(A);
        const dirac::SpectralProjectorSet proj(dirac::DiracSymbolFamily(g, coeff));
        const auto F = potentials::cauchy_extension({dirac::random_compatible_field(g, rng, 3)}, proj, nodes);
        rec = std::max(rec, potentials::potential_reconstruct(F, coeff).residual);
    }
    r.add("calculus/potential_reconstruction_residual", rec, at_most(1e-8), "invariant");

    // half-order time derivative: kernel vs spectral backends, far-field decay
    const std::size_t N = 512;
    const double h = 32.0 / N, t0 = -16.0;
    std::vector<cd> v(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double t = t0 + h * static_cast<double>(i);
        v[i] = std::exp(-t * t / 2);
    }
    std::vector<double> agree, slopes;
    for (auto var : {fractime::HalfVariant::plain, fractime::HalfVariant::hilbert}) {
        const auto k = fractime::half_derivative_kernel_apply(v, h, var);
        agree.push_back(max_abs_diff(k, fractime::half_derivative_spectral(v, h, var, 256)));
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (std::size_t i = 0; i < N; ++i) {
            const double t = std::abs(t0 + h * static_cast<double>(i));
            if (t < 6 || t > 15) continue;
            const double x = std::log(t), y = std::log(std::abs(k[i]));
            sx += x, sy += y, sxx += x * x, sxy += x * y, ++m;
        }
        slopes.push_back(-(m * sxy - sx * sy) / (m * sxx - sx * sx));
    }
    r.add("calculus/half_derivative_backends", agree, at_most(1e-3), "oracle");
    r.add("calculus/kernel_decay_exponent", slopes, {1.3, 1.7}, "oracle");
}

// ---------------------------------------------------------------- layers

void layers(const Config& cfg, Calibration&, VerificationReport& r, std::mt19937_64& rng) {
    const Grid g = cfg.grid.make();
    const int n = g.n;
    double jump = 0.0, green = 0.0, fact = 0.0;
    std::size_t excluded = 0;
    const auto nodes = geometric_nodes(1e-3, 1.5, 20.0);
    for (const Mat& A : coefficient_set(cfg, n, rng)) {
        const auto m = dirac::coefficient_multiplier(A);
        for (std::size_t i = 0; i < g.points(); ++i) {
            const Frequency f = g.frequency(i);
            if (f.is_zero()) continue;
            const potentials::ModeOperator op(f, m, n);
            const auto t = op.traces();
            jump = std::max({jump, (op.chi_plus().col(0) + op.chi_minus().col(0) - dirac::e_perp(n)).norm(),
                             std::abs(t.dnS0_plus - t.dnS0_minus - 1.0), std::abs(t.D0_plus - t.D0_minus + 1.0)});
        }
        const auto coeff = dirac::CoefficientMatrix::constant(A);
        const dirac::DiracSymbolFamily fam(g, coeff);
        const dirac::SpectralProjectorSet proj(fam);
        const ConormalField h = dirac::random_compatible_field(g, rng, 3);
        for (HalfSpace side : {HalfSpace::upper, HalfSpace::lower}) {
            const auto F = potentials::cauchy_extension({h, -0.5, side}, proj, nodes);
            const auto u = potentials::potential_reconstruct(F, coeff).u;
            const ConormalField h0 = potentials::map_modes(h, [&](std::size_t i, const Vec& x) {
                return Vec((side == HalfSpace::upper ? proj[i].chi_plus : proj[i].chi_minus) * x);
            });
            const auto tr = potentials::boundary_traces(h0);
            const auto G = potentials::greens_reconstruct(tr.value, tr.conormal, proj, nodes, side);
            green = std::max(green, potentials::max_relative_error_mod_constant(G, u));
        }
        const auto D = potentials::dtn_operators(proj);
        fact = std::max({fact, D.factorization_residual, D.inverse_residual});
        excluded += D.excluded_upper + D.excluded_lower;
    }
    r.add("layers/jump_relations", jump, at_most(1e-10), "exact");
    r.add("layers/green_reconstruction", green, at_most(1e-6), "oracle");
    r.add("layers/dtn_factorizations", fact, at_most(1e-9), "invariant");
    r.add("layers/dtn_excluded_frequencies", static_cast<double>(excluded), at_most(kInf), "invariant");

    // per-mode oracle agreement over random triples
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    double ext = 0.0, dtn = 0.0, trace = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const int nn = 1 + trial % 2;
        const Mat A = dirac::random_elliptic(nn, rng);
        std::array<double, kMaxSpatialDim> xi{};
        for (int j = 0; j < nn; ++j) xi[static_cast<std::size_t>(j)] = U(rng);
        const double tau = U(rng);
        const Frequency f = potentials::make_frequency(xi, tau);
        const potentials::ModeOperator op(f, dirac::coefficient_multiplier(A), nn);
        const auto o = potentials::per_mode_bvp_oracle(A, xi, tau, potentials::DataKind::dirichlet, 1.0);
        const Vec hv = potentials::conormal_of(A, f, o.u0, o.du(0.0));
        for (double l : {0.05, 0.5, 2.0})
            ext = std::max(ext, (op.cauchy(l) * hv - potentials::conormal_of(A, f, o.u(l), o.du(l))).norm() / hv.norm());
        const Mat p = dirac::dirac_symbol(f, nn), m = dirac::coefficient_multiplier(A);
        const auto P = dirac::mode_projectors(dirac::ModeSymbols{f, p, p * m, m * p}, nn);
        dtn = std::max(dtn, std::abs(P.spr / (1.0 - P.spp) * dirac::d_r(f) - o.dtn) / std::abs(o.dtn));
        trace = std::max(trace, std::abs(op.traces().S0 - o.single_layer_trace) / std::abs(o.single_layer_trace));
    }
    r.add("layers/oracle_extensions", ext, at_most(1e-8), "oracle");
    r.add("layers/oracle_dtn", dtn, at_most(1e-8), "oracle");
    r.add("layers/oracle_single_layer_trace", trace, at_most(1e-8), "oracle");

    // truncated whole-space inverse
    ScalarField f = to_spectral(ScalarField::from_function(g, [&](const auto& x, double t) {
        return cd(std::cos(x[0] + 2 * 3.141592653589793 * t / g.Lt), std::sin(2 * x[0]));
    }));
    f[0] = 0.0;
    f = to_physical(f);
    const dirac::DiracSymbolFamily fam(g, dirac::CoefficientMatrix::constant(dirac::random_elliptic(n, rng)));
    const ScalarField q = potentials::inverse_whole_space(f, fam, 1e-3, 1e2);
    r.add("layers/inverse_quadrature", (q - potentials::inverse_whole_space_exact(f, fam, 1e-3, 1e2)).norm() / q.norm(),
          at_most(1e-4), "exact");
    std::vector<double> errs;
    for (auto [e, R] : {std::pair{1e-1, 1e1}, {1e-2, 1e2}, {1e-3, 1e3}})
        errs.push_back((potentials::apply_parabolic_operator(potentials::inverse_whole_space_exact(f, fam, e, R), fam) + f).norm() /
                       f.norm());
    r.add_verdict("layers/inverse_widening", errs, {0.0, errs.front()}, errs[1] < errs[0] && errs[2] < errs[1], "invariant");
}

// ---------------------------------------------------------------- energy

void energy(const Config& cfg, Calibration& cal, VerificationReport& r, std::mt19937_64& rng) {
    const Grid g = cfg.energy_grid.make();
    const energy::DiscreteSlab slab{g, cfg.Lambda, cfg.Nlambda};
    const energy::DiscreteSlab small{g, 4.0, 16};
    const auto heat = dirac::CoefficientMatrix::constant(dirac::identity_coefficients(g.n));
    const auto delta_for = [&](const dirac::CoefficientMatrix& A) { return cfg.delta.value_or(energy::default_delta(A)); };

    std::vector<double> margins{energy::coercivity_margin(heat, small, delta_for(heat), cfg.trials, rng)};
    for (int i = 0; i < cfg.coefficient_samples; ++i) {
        const auto A = dirac::random_rough(g, rng);
        margins.push_back(energy::coercivity_margin(A, small, delta_for(A), cfg.trials, rng));
    }
    r.add("energy/coercivity_margin", margins, at_least(-1e-10), "invariant");

    // constant coefficients against the per-mode oracle
    double oracle_err = 0.0, residual = 0.0;
    const std::size_t fl = g.flat({1, 0, 0}, 1);
    const Frequency q = g.frequency(fl);
    for (const Mat& A : coefficient_set(cfg, g.n, rng)) {
        const auto coeff = dirac::CoefficientMatrix::constant(A);
        const energy::DeltaForm form(coeff, slab, delta_for(coeff));
        ScalarField fh(g, Space::spectral);
        fh[fl] = 1.0;
        for (auto kind : {energy::BoundaryKind::neumann, energy::BoundaryKind::dirichlet}) {
            const auto sol = energy::solve_energy_bvp(form, kind, to_physical(fh));
            residual = std::max(residual, sol.residual);
            const auto o = potentials::per_mode_bvp_oracle(
                A, q.xi, q.tau,
                kind == energy::BoundaryKind::neumann ? potentials::DataKind::neumann : potentials::DataKind::dirichlet, 1.0);
            double err = 0.0, scale = 0.0;
            for (int j = 0; j < slab.Nlambda; ++j) {
                err = std::max(err, std::abs(to_spectral(sol.u.nodes[static_cast<std::size_t>(j)])[fl] - o.u(slab.node(j))));
                scale = std::max(scale, std::abs(o.u(slab.node(j))));
            }
            oracle_err = std::max(oracle_err, err / scale);
        }
    }
    r.add("energy/solver_vs_oracle", oracle_err, at_most(1e-2), "oracle");

    // rough coefficients: Dirichlet solve, discrete conormal, Neumann solve
    const auto A = dirac::random_rough(g, rng);
    const energy::DeltaForm form(A, slab, delta_for(A));
    const ScalarField f = ScalarField::from_function(g, [&](const auto& x, double t) {
        return cd(std::cos(x[0] + 2 * 3.141592653589793 * t / g.Lt), std::sin(2 * x[0]));
    });
    const auto dir = energy::solve_energy_bvp(form, energy::BoundaryKind::dirichlet, f);
    const auto neu = energy::solve_energy_bvp(form, energy::BoundaryKind::neumann, energy::discrete_conormal(form, dir.u));
    residual = std::max({residual, dir.residual, neu.residual});
    r.add("energy/dirichlet_neumann_consistency",
          (neu.u.to_vector() - dir.u.to_vector()).norm() / dir.u.to_vector().norm(), at_most(1e-2), "invariant");
    r.add("energy/weak_residual", residual, at_most(1e-9), "invariant");

    // energy estimate shape for constant-coefficient Cauchy extensions
    const Grid ge = cfg.grid.make();
    const auto nodes = geometric_nodes(1e-3, 1.1, 60.0);
    const auto w = trapezoid_weights(nodes);
    double lo = kInf, hi = 0.0;
    for (const Mat& Ac : coefficient_set(cfg, ge.n, rng)) {
        const dirac::DiracSymbolFamily fam(ge, dirac::CoefficientMatrix::constant(Ac));
        const dirac::SpectralProjectorSet proj(fam);
        for (int t = 0; t < std::max(1, cfg.trials / 4); ++t) {
            ConormalField h = dirac::random_compatible_field(ge, rng, 3);
            h = potentials::map_modes(h, [&](std::size_t i, const Vec& x) { return Vec(proj[i].chi_plus * x); });
            const auto F = potentials::cauchy_extension({h}, proj, nodes);
            double mass = 0.0;
            for (std::size_t j = 0; j < nodes.size(); ++j) mass += w[j] * std::pow(F.fields[j].norm(), 2);
            const double tr = dirac::sobolev_scale_norm(h, -0.5, dirac::ScaleOperator::P, fam);
            const double ratio = mass / (tr * tr);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
    }
    cal.check(r, "energy/energy_estimate_band", lo, hi);
}

// ---------------------------------------------------------------- kato

void kato(const Config& cfg, Calibration& cal, VerificationReport& r, std::mt19937_64& rng) {
    const Grid g = cfg.kato_grid.make();
    if (g.points() > cfg.dense_limit) throw UsageError("kato suite: grid exceeds the dense size budget");
    const auto heat = dirac::CoefficientMatrix::constant(dirac::identity_coefficients(g.n));
    const auto Lh = energy::assemble_parabolic_L(heat, g);
    const auto rh = energy::kato_sqrt_ratio(Lh, 4 * cfg.trials, rng);
    r.add("kato/heat_sqrt_residual", rh.sqrt_residual, at_most(1e-8), "exact");
    r.add("kato/heat_ratio_band", std::vector<double>{rh.min_ratio, rh.max_ratio}, {std::pow(2.0, -0.25) - 0.02, 1.02},
          "oracle");

    const Grid fine = GridSpec{g.n, cfg.kato_refined, cfg.kato_refined, cfg.kato_grid.Lx, cfg.kato_grid.Lt}.make();
    double resid = rh.sqrt_residual, margin = kInf, lo = kInf, hi = 0.0, drift = 0.0;
    for (int i = 0; i < cfg.coefficient_samples; ++i) {
        const std::uint64_t seed = cfg.seed + 1000u * static_cast<std::uint64_t>(i + 1);
        energy::KatoRatios band[2];
        int idx = 0;
        for (const Grid& gg : {g, fine}) {
            if (gg.points() > cfg.dense_limit) throw UsageError("kato suite: refined grid exceeds the dense size budget");
            const auto A = dirac::random_rough_cells(gg, cfg.kato_cells, seed, true);
            const auto L = energy::assemble_parabolic_L(A, gg);
            margin = std::min(margin, energy::accretivity_margin(L, cfg.trials, rng));
            band[idx] = energy::kato_sqrt_ratio(L, 4 * cfg.trials, rng);
            resid = std::max(resid, band[idx].sqrt_residual);
            ++idx;
        }
        lo = std::min(lo, band[0].min_ratio);
        hi = std::max(hi, band[0].max_ratio);
        drift = std::max({drift, std::abs(band[1].min_ratio - band[0].min_ratio) / band[0].min_ratio,
                          std::abs(band[1].max_ratio - band[0].max_ratio) / band[0].max_ratio});
    }
    r.add("kato/accretivity_margin", margin, at_least(-1e-10), "invariant");
    r.add("kato/sqrt_residual", resid, at_most(1e-8), "exact");
    r.add("kato/rough_min_ratio", lo, at_least(0.05), "invariant");
    cal.check(r, "kato/rough_ratio_band", lo, hi);
    r.add("kato/refinement_drift", drift, at_most(0.2), "invariant");
}

// ---------------------------------------------------------------- estimates

void estimates(const Config& cfg, Calibration& cal, VerificationReport& r, std::mt19937_64& rng) {
    const Grid g = cfg.grid.make();
    const int n = g.n;
    const auto nodes = cfg.nodes.make();

    // square function: quadrature against the per-mode closed form on eigenvectors of pm
    double sf_err = 0.0;
    for (const Mat& A : coefficient_set(cfg, n, rng)) {
        const dirac::DiracSymbolFamily fam(g, dirac::CoefficientMatrix::constant(A));
        const dirac::SpectralProjectorSet proj(fam);
        const std::size_t fl = g.flat({1, 0, 0}, 1 % g.Nt);
        Eigen::ComplexEigenSolver<Mat> es(fam.mode(fl).pm);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const cd mu = es.eigenvalues()(k);
            if (mu.real() < 1e-8) continue;
            std::vector<Vec> v(g.points(), Vec::Zero(n + 2));
            v[fl] = es.eigenvectors().col(k);
            const ConormalField h = dirac::from_modal_vectors(g, v, Space::spectral);
            const auto F = potentials::cauchy_extension({h}, proj, nodes);
            for (double s : {0.0, -0.5}) {
                const double q = square_function(F, extension_derivative(F, fam), s);
                const double want = square_function_mode(mu, s) * std::pow(h.norm(), 2);
                sf_err = std::max(sf_err, std::abs(q - want) / want);
            }
        }
    }
    r.add("estimates/square_function_closed_form", sf_err, at_most(1e-6), "oracle");

    double sf_lo = kInf, sf_hi = 0.0, nt_lo = kInf, nt_hi = 0.0, robust = 1.0;
    bool sandwich_ok = true;
    for (const Mat& A : coefficient_set(cfg, n, rng)) {
        const dirac::DiracSymbolFamily fam(g, dirac::CoefficientMatrix::constant(A));
        const dirac::SpectralProjectorSet proj(fam);
        for (int t = 0; t < cfg.trials; ++t) {
            ConormalField h = dirac::random_compatible_field(g, rng, 3);
            h = potentials::map_modes(h, [&](std::size_t i, const Vec& x) { return Vec(proj[i].chi_plus * x); });
            if (h.norm() < 1e-8) continue;
            const auto F = potentials::cauchy_extension({h}, proj, nodes);
            const double q = square_function(F, extension_derivative(F, fam), 0.0) / std::pow(h.norm(), 2);
            sf_lo = std::min(sf_lo, q);
            sf_hi = std::max(sf_hi, q);
            const double nt = nontangential_maximal(F, cfg.whitney).norm();
            nt_lo = std::min(nt_lo, nt / h.norm());
            nt_hi = std::max(nt_hi, nt / h.norm());
            if (t == 0) {
                const auto sw = sandwich(F, cfg.whitney);
                sandwich_ok = sandwich_ok && sw.lower_holds() && sw.upper_holds();
                for (WhitneyConfig alt : {WhitneyConfig{cfg.whitney.c0, cfg.whitney.c1, 2 * cfg.whitney.c2, 2 * cfg.whitney.c3},
                                          WhitneyConfig{cfg.whitney.c0 / 2, cfg.whitney.c1, cfg.whitney.c2, cfg.whitney.c3},
                                          WhitneyConfig{cfg.whitney.c0, 2 * cfg.whitney.c1, cfg.whitney.c2 / 2, cfg.whitney.c3 / 2}}) {
                    const double other = nontangential_maximal(F, alt).norm();
                    robust = std::max(robust, std::max(other / nt, nt / other));
                }
            }
        }
    }
    cal.check(r, "estimates/square_function_ratio", sf_lo, sf_hi);
    cal.check(r, "estimates/nontangential_ratio", nt_lo, nt_hi);
    r.add_verdict("estimates/sandwich", {sandwich_ok ? 1.0 : 0.0}, {1.0, 1.0}, sandwich_ok, "invariant");
    r.add("estimates/whitney_robustness", robust, at_most(4.0), "invariant");

    // Whitney averages converge to the trace
    {
        const dirac::DiracSymbolFamily fam(g);
        ConormalField h = dirac::random_compatible_field(g, rng, 2);
        std::vector<double> med;
        for (double lmin : {0.04, 0.02, 0.01}) {
            const auto nd = geometric_nodes(lmin, 1.189207115002721, 1.0);
            const auto F = potentials::semigroup_extension(h, fam, potentials::Operand::pm, nd);
            const ScalarField dev = whitney_trace_deviation(F, h, cfg.whitney);
            std::vector<double> vals;
            for (std::size_t i = 0; i < dev.size(); ++i) vals.push_back(dev[i].real());
            med.push_back(median(vals));
        }
        const bool halves = med[1] <= 0.5 * med[0] && med[2] <= 0.5 * med[1];
        r.add_verdict("estimates/whitney_trace_convergence", med, {0.0, med.front()}, halves, "invariant");
    }

    // reverse Hoelder: heat calibration, random constant coefficients against 10x the baseline
    {
        const auto rh_nodes = uniform_nodes(0.05, 4.0, 160);
        const auto sweep = [&](const Mat& A, int count, bool unit) {
            double worst = 0.0;
            std::mt19937_64 local(cfg.seed + 77);
            std::uniform_int_distribution<std::size_t> P(0, g.points() - 1);
            std::uniform_real_distribution<double> L(0.8, 2.0);
            for (int t = 0; t < count; ++t) {
                const auto f = to_physical(dirac::random_compatible_field(g, local, 3).perp());
                const auto u = dirichlet_extension(A, f, rh_nodes);
                RegionSpec reg{L(local), P(local), 1.0 / 16.0, unit};
                worst = std::max(worst, reverse_holder_ratio(u, reg).ratio);
            }
            return worst;
        };
        const int count = std::max(5, cfg.trials);
        const double heat_max = sweep(dirac::identity_coefficients(n), count, false);
        cal.check(r, "estimates/reverse_holder_heat", heat_max, heat_max);
        const double base = cal.frozen("estimates/reverse_holder_heat").value_or(Band{heat_max, heat_max}).hi;
        double worst = 0.0;
        bool weights_ok = true;
        for (int i = 0; i < cfg.coefficient_samples; ++i) {
            const Mat A = dirac::random_elliptic(n, rng);
            const double wr = sweep(A, count, false);
            worst = std::max(worst, wr);
            weights_ok = weights_ok && sweep(A, count, true) <= wr * (1 + 1e-12);
        }
        r.add("estimates/reverse_holder_random", worst, {0.0, 10.0 * base}, "calibrated");
        r.add_verdict("estimates/reverse_holder_unit_weights", {weights_ok ? 1.0 : 0.0}, {1.0, 1.0}, weights_ok, "invariant");
    }

    // Rellich
    {
        const dirac::SpectralProjectorSet heat{dirac::DiracSymbolFamily(g)};
        const auto hb = rellich_ratio(heat, cfg.trials, rng);
        r.add("estimates/rellich_heat", std::vector<double>{hb.min, hb.max}, {std::pow(2.0, -0.25) - 1e-12, 1.0 + 1e-12},
              "oracle");
        double lo = kInf, hi = 0.0;
        bool inside = true;
        for (int i = 0; i < cfg.coefficient_samples; ++i) {
            const dirac::SpectralProjectorSet proj(
                dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(dirac::random_hermitian_elliptic(n, rng))));
            const auto b = rellich_ratio(proj, cfg.trials, rng);
            const auto mb = rellich_mode_band(proj);
            inside = inside && b.min >= mb.min * (1 - 1e-10) && b.max <= mb.max * (1 + 1e-10);
            lo = std::min(lo, b.min);
            hi = std::max(hi, b.max);
        }
        cal.check(r, "estimates/rellich_hermitian_band", lo, hi);
        r.add_verdict("estimates/rellich_within_mode_band", {inside ? 1.0 : 0.0}, {1.0, 1.0}, inside, "oracle");
    }
}

// ---------------------------------------------------------------- diagnostics

void diagnostics(const Config& cfg, Calibration&, VerificationReport& r, std::mt19937_64& rng) {
    const Grid g = cfg.grid.make();
    const int n = g.n;
    const dirac::SpectralProjectorSet block(
        dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(dirac::random_block_elliptic(n, rng))));
    const dirac::SpectralProjectorSet heat{dirac::DiracSymbolFamily(g)};
    std::vector<Mat> coeffs;
    for (int i = 0; i < cfg.coefficient_samples; ++i) coeffs.push_back(dirac::random_elliptic(n, rng));

    for (double s : cfg.s_values) {
        char label[32];
        std::snprintf(label, sizeof label, "diagnostics/s=%.2f/", s);
        const std::string tag = label;
        const auto wb = wellposedness_diagnostics(block, s, cfg.floor);
        double dev = 0.0;
        for (const char* nm : {"1+s_pp", "1-s_pp", "1+s_rr", "1-s_rr"})
            dev = std::max({dev, std::abs(wb.at(nm).inf - 1.0), std::abs(wb.at(nm).sup - 1.0)});
        r.add(tag + "block_diagonal_unit", dev, at_most(1e-10), "exact");

        const auto wh = wellposedness_diagnostics(heat, s, cfg.floor);
        r.add(tag + "heat_off_diagonal_inf", std::vector<double>{wh.at("s_pr").inf, wh.at("s_rp").inf}, at_least(cfg.floor),
              "oracle");
        double lres = wh.layer_residual;
        double worst_inf = kInf;
        for (const Mat& A : coeffs) {
            const auto w = wellposedness_diagnostics(
                dirac::SpectralProjectorSet(dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(A))), s, cfg.floor);
            lres = std::max(lres, w.layer_residual);
            for (std::size_t k = 0; k < 6; ++k) worst_inf = std::min(worst_inf, w.operators[k].inf);
        }
        r.add(tag + "layer_assembly_residual", lres, at_most(1e-9), "oracle");
        if (std::abs(s + 0.5) < 1e-12) r.add(tag + "six_operators_inf", worst_inf, at_least(cfg.floor), "oracle");
        else r.add(tag + "six_operators_inf", worst_inf, at_least(0.0), "invariant");
    }
    const double angle = dirac::sector_angle(dirac::DiracSymbolFamily(g, dirac::CoefficientMatrix::constant(coeffs.front())));
    r.add("diagnostics/sector_angle", angle, {0.0, 3.141592653589793 / 2}, "invariant");
}

}  // namespace

void run_suite(const std::string& name, const Config& cfg, Calibration& cal, VerificationReport& report) {
    static const std::map<std::string, void (*)(const Config&, Calibration&, VerificationReport&, std::mt19937_64&)> table = {
        {"calculus", calculus}, {"layers", layers},       {"energy", energy},
        {"kato", kato},         {"estimates", estimates}, {"diagnostics", diagnostics}};
    const auto it = table.find(name);
    if (it == table.end()) throw UsageError("unknown suite '" + name + "'");
    auto rng = suite_rng(cfg, name);
    it->second(cfg, cal, report, rng);
}

VerificationReport run_report(const Config& cfg, const std::vector<std::string>& suites, Calibration& cal,
                              const std::string& label) {
    VerificationReport report(label);
    const auto& list = suites.empty() ? cfg.suites : suites;
    report.environment() = describe(cfg);
    report.environment()["suites"] = list;
    for (const auto& s : list) run_suite(s, cfg, cal, report);
    return report;
}

}  // namespace pdir::harness
