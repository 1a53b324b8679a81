#include <cmath>
#include <numbers>
#include <random>

#include "dirac/scales.hpp"
#include "doctest.h"
#include "oracles/random.hpp"
#include "potentials/dtn.hpp"
#include "potentials/extensions.hpp"
#include "potentials/inverse.hpp"
#include "potentials/layers.hpp"
#include "potentials/modal.hpp"
#include "potentials/oracle.hpp"
#include "potentials/reconstruct.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

using namespace pdir;
using namespace pdir::potentials;
using dirac::Mat;
using dirac::Vec;

namespace {

const cd I(0.0, 1.0);

// spectral conormal field with a single nonzero mode
ConormalField single_mode(const Grid& g, std::size_t flat, const Vec& h) {
    std::vector<Vec> v(g.points(), Vec::Zero(g.n + 2));
    v[flat] = h;
    return dirac::from_modal_vectors(g, v, Space::spectral);
}

std::size_t flat_of(const Grid& g, int k, int m) {
    return g.flat({(k + g.Nx) % g.Nx, 0, 0}, (m + g.Nt) % g.Nt);
}

std::array<double, kMaxSpatialDim> random_xi(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::array<double, kMaxSpatialDim> xi{};
    for (int j = 0; j < n; ++j) xi[static_cast<std::size_t>(j)] = u(rng);
    return xi;
}

}  // namespace

TEST_CASE("mode oracle closed forms") {
    const auto o1 = per_mode_bvp_oracle(dirac::identity_coefficients(1), {1, 0, 0}, 0.0, DataKind::dirichlet, 1.0);
    CHECK(std::abs(o1.rho - 1.0) < 1e-14);
    CHECK(std::abs(o1.u(0.5) - std::exp(-0.5)) < 1e-14);
    const auto o2 = per_mode_bvp_oracle(dirac::identity_coefficients(1), {0, 0, 0}, 1.0, DataKind::dirichlet, 1.0);
    CHECK(std::abs(o2.rho - std::polar(1.0, std::numbers::pi / 4)) < 1e-14);
    Mat A(2, 2);
    A << 4.0, 0.0, 0.0, 1.0;
    const auto o3 = per_mode_bvp_oracle(A, {1, 0, 0}, 0.0, DataKind::neumann, 1.0);
    CHECK(std::abs(o3.rho - 0.5) < 1e-14);
    CHECK(std::abs(o3.conormal0 - 1.0) < 1e-14);
    CHECK(std::abs(o3.u0 * o3.dtn - 1.0) < 1e-14);
    CHECK_THROWS_AS(per_mode_bvp_oracle(A, {0, 0, 0}, 0.0, DataKind::dirichlet, 1.0), UsageError);
}

TEST_CASE("cauchy extension examples") {
    const Grid g = Grid::make(1, 8, 8);
    dirac::DiracSymbolFamily fam(g);
    dirac::SpectralProjectorSet proj(fam);
    const auto nodes = geometric_nodes();
    const std::size_t k1 = flat_of(g, 1, 0);

    Vec h(3);
    h << 1.0, -I, 0.0;
    h /= std::sqrt(2.0);
    const auto F = cauchy_extension({single_mode(g, k1, h), -0.5, HalfSpace::upper}, proj, nodes);
    double worst = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const auto v = dirac::modal_vectors(F.fields[j]);
        worst = std::max(worst, (v[k1] - std::exp(-nodes[j]) * h).norm());
    }
    CHECK(worst < 1e-13);

    Vec hm(3);
    hm << 1.0, I, 0.0;
    const auto Z = cauchy_extension({single_mode(g, k1, hm), -0.5, HalfSpace::upper}, proj, nodes);
    for (const auto& f : Z.fields) CHECK(f.norm() < 1e-13);

    // the lower side keeps exactly the other eigenvector
    const auto L = cauchy_extension({single_mode(g, k1, hm), -0.5, HalfSpace::lower}, proj, nodes);
    CHECK((dirac::modal_vectors(L.fields[3])[k1] - std::exp(-nodes[3]) * hm).norm() < 1e-13);

    CHECK_THROWS_AS(cauchy_extension({single_mode(g, k1, h), -2.0, HalfSpace::upper}, proj, nodes), UsageError);
    Vec bad(3);
    bad << 0.0, 1.0, 1.0;
    CHECK_THROWS_AS(cauchy_extension({single_mode(g, flat_of(g, 1, 1), bad), -0.5, HalfSpace::upper}, proj, nodes),
                    DomainError);
}

TEST_CASE("cauchy extension: semigroup law, limits and monotonicity") {
    std::mt19937_64 rng(11);
    const Grid g = Grid::make(1, 8, 8);
    const dirac::CoefficientMatrix A = dirac::CoefficientMatrix::constant(dirac::random_elliptic(1, rng));
    dirac::DiracSymbolFamily fam(g, A);
    dirac::SpectralProjectorSet proj(fam);
    const ConormalField h = dirac::random_compatible_field(g, rng);

    const double l1 = 0.3, l2 = 0.45;
    const auto F = cauchy_extension({h, -0.5, HalfSpace::upper}, proj, {l1, l1 + l2});
    const auto G = cauchy_extension({F.fields[0], -0.5, HalfSpace::upper}, proj, {l2});
    CHECK((G.fields[0] - F.fields[1]).norm() <= 1e-10 * F.fields[1].norm());

    // lambda -> 0 gives chi^+ h
    const ConormalField hp = map_modes(h, [&](std::size_t i, const Vec& v) { return Vec(proj[i].chi_plus * v); });
    const auto near = cauchy_extension({h, -0.5, HalfSpace::upper}, proj, {1e-9});
    CHECK((near.fields[0] - hp).norm() <= 1e-7 * hp.norm());

    // heat: p is normal, so the extension norm is non-increasing
    dirac::DiracSymbolFamily heat(g);
    dirac::SpectralProjectorSet hproj(heat);
    const auto H = cauchy_extension({h, -0.5, HalfSpace::upper}, hproj, geometric_nodes());
    for (std::size_t j = 1; j < H.size(); ++j) CHECK(H.fields[j].norm() <= H.fields[j - 1].norm() * (1 + 1e-12));
}

TEST_CASE("semigroup extension") {
    std::mt19937_64 rng(12);
    const Grid g = Grid::make(1, 8, 8);
    const dirac::CoefficientMatrix A = dirac::CoefficientMatrix::constant(dirac::random_elliptic(1, rng));
    dirac::DiracSymbolFamily fam(g, A);
    dirac::SpectralProjectorSet proj(fam);
    const ConormalField h = dirac::random_compatible_field(g, rng);
    const ConormalField hp = map_modes(h, [&](std::size_t i, const Vec& v) { return Vec(proj[i].chi_plus * v); });
    const auto nodes = geometric_nodes(1e-2, 1.5, 10.0);

    const auto C = cauchy_extension({hp, -0.5, HalfSpace::upper}, proj, nodes);
    const auto S = semigroup_extension(hp, fam, Operand::pm, nodes);
    for (std::size_t j = 0; j < nodes.size(); ++j) CHECK((C.fields[j] - S.fields[j]).norm() <= 1e-10 * hp.norm());

    // arbitrary data, including a kernel part, is recovered as lambda -> 0
    ConormalField raw(std::vector<ScalarField>{oracle::random_field(g, rng), oracle::random_field(g, rng),
                                               oracle::random_field(g, rng)});
    for (Operand op : {Operand::pm, Operand::mp}) {
        const auto R = semigroup_extension(raw, fam, op, {1e-10, 1.0, 50.0});
        CHECK((R.fields[0] - raw).norm() <= 1e-8 * raw.norm());
        // far out only the kernel part survives, constant in lambda
        const ConormalField ker = map_modes(raw, [&](std::size_t i, const Vec& v) {
            const auto ms = fam.mode(i);
            const Mat& T = op == Operand::pm ? ms.pm : ms.mp;
            const Mat pi = dirac::matrix_function(T, dirac::funcs::range_indicator());
            return Vec(v - pi * v);
        });
        CHECK((R.fields[2] - ker).norm() <= 1e-6 * raw.norm());
        CHECK(R.fields[1].norm() <= 10.0 * raw.norm());
    }
}

TEST_CASE("potential reconstruction") {
    const double L = 2.0 * std::numbers::pi;
    const Grid g = Grid::make(1, 8, 8, L, L);
    const auto nodes = geometric_nodes(1e-2, 1.25, 5.0);
    const auto A = dirac::CoefficientMatrix::constant(dirac::identity_coefficients(1));
    // u = e^{-lambda} e^{i(x + t)}: D_A u = (-1, i, i) u
    ConormalProfile F{nodes, HalfSpace::upper, {}};
    ScalarProfile truth{nodes, HalfSpace::upper, {}};
    for (double l : nodes) {
        const ScalarField u = ScalarField::from_function(
            g, [&](const std::array<double, kMaxSpatialDim>& x, double t) { return std::exp(-l) * std::exp(I * (x[0] + t)); });
        truth.fields.push_back(u);
        F.fields.push_back(ConormalField(std::vector<ScalarField>{-1.0 * u, I * u, I * u}));
    }
    const auto R = potential_reconstruct(F, A);
    CHECK(R.residual < 1e-12);
    CHECK(R.up_to_constant);
    CHECK(max_relative_error_mod_constant(R.u, truth) < 1e-12);
    for (std::size_t j = 0; j < nodes.size(); ++j) CHECK((R.du.fields[j] + truth.fields[j]).norm() < 1e-12);

    // zero input -> constant
    ConormalProfile Z{nodes, HalfSpace::upper, std::vector<ConormalField>(nodes.size(), ConormalField(g))};
    for (const auto& u : potential_reconstruct(Z, A).u.fields) CHECK(u.norm() == 0.0);

    // linearity
    std::mt19937_64 rng(5);
    const auto Ac = dirac::CoefficientMatrix::constant(dirac::random_elliptic(1, rng));
    dirac::DiracSymbolFamily fam(g, Ac);
    dirac::SpectralProjectorSet proj(fam);
    const auto F1 = cauchy_extension({dirac::random_compatible_field(g, rng), -0.5, HalfSpace::upper}, proj, nodes);
    const auto F2 = cauchy_extension({dirac::random_compatible_field(g, rng), -0.5, HalfSpace::upper}, proj, nodes);
    ConormalProfile F12 = F1;
    for (std::size_t j = 0; j < nodes.size(); ++j) F12.fields[j] += F2.fields[j];
    auto sum = potential_reconstruct(F1, Ac).u;
    const auto u2 = potential_reconstruct(F2, Ac).u;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum.fields[j] += u2.fields[j];
    CHECK(max_relative_error_mod_constant(potential_reconstruct(F12, Ac).u, sum) < 1e-12);

    // finite differences in lambda agree with the recovered normal derivative
    const auto fine = geometric_nodes(1e-2, 1.02, 0.3);
    const auto R1 = potential_reconstruct(
        cauchy_extension({dirac::random_compatible_field(g, rng), -0.5, HalfSpace::upper}, proj, fine), Ac);
    CHECK(max_relative_error_mod_constant(lambda_derivative(R1.u), R1.du) < 1e-2);

    // incompatible data
    ConormalProfile bad = F1;
    bad.fields[0][1] += oracle::random_field(g, rng);
    CHECK_THROWS_AS(potential_reconstruct(bad, Ac), DomainError);
}

TEST_CASE("layer jumps and conormal identities") {
    std::mt19937_64 rng(21);
    const Grid g = Grid::make(1, 8, 8);
    for (int trial = 0; trial < 4; ++trial) {
        const Mat A = trial == 0 ? dirac::identity_coefficients(1) : dirac::random_elliptic(1, rng);
        double jump = 0.0, djump = 0.0, rel = 0.0, limit = 0.0;
        for (std::size_t i = 0; i < g.points(); ++i) {
            const Frequency f = g.frequency(i);
            if (f.is_zero()) continue;
            const ModeOperator op(f, dirac::coefficient_multiplier(A), 1);
            const LayerTraces t = op.traces();
            const Vec e = dirac::e_perp(1);
            jump = std::max(jump, (op.chi_plus().col(0) + op.chi_minus().col(0) - e).norm());
            jump = std::max(jump, std::abs(t.dnS0_plus - t.dnS0_minus - 1.0));
            djump = std::max(djump, std::abs(t.D0_plus - t.D0_minus + 1.0));
            for (double l : {0.2, -0.7, 1.3}) {
                const Vec cs = conormal_of(A, f, op.single_layer(l), op.single_layer_derivative(l));
                rel = std::max(rel, (cs - op.single_layer_conormal(l)).norm() / cs.norm());
                const Vec cdl = conormal_of(A, f, op.double_layer(l), op.double_layer_derivative(l));
                rel = std::max(rel, (cdl - op.double_layer_conormal(l)).norm() / cdl.norm());
            }
            limit = std::max({limit, std::abs(op.single_layer(1e-12) - t.S0), std::abs(op.single_layer(-1e-12) - t.S0),
                              std::abs(op.double_layer(1e-12) - t.D0_plus), std::abs(op.double_layer(-1e-12) - t.D0_minus),
                              std::abs(op.single_layer_conormal(1e-12)(0) - t.dnS0_plus),
                              std::abs(op.single_layer_conormal(-1e-12)(0) - t.dnS0_minus),
                              std::abs(op.double_layer_conormal(1e-12)(0) - t.dnD0),
                              std::abs(op.double_layer_conormal(-1e-12)(0) - t.dnD0)});
        }
        CHECK(jump < 1e-10);
        CHECK(djump < 1e-10);
        CHECK(rel < 1e-10);
        CHECK(limit < 1e-9);
    }
}

TEST_CASE("heat layer traces") {
    for (auto [xi, tau] : {std::pair{1.0, 0.0}, {0.5, 2.0}, {0.0, -1.0}, {2.0, 3.0}}) {
        const Frequency f = make_frequency({xi, 0, 0}, tau);
        const ModeOperator op(f, Mat::Identity(3, 3), 1);
        const LayerTraces t = op.traces();
        CHECK(std::abs(t.S0 + 0.5 / std::sqrt(f.parabolic())) < 1e-12);
        CHECK(std::abs(t.dnS0_plus - 0.5) < 1e-12);
        CHECK(std::abs(t.dnS0_minus + 0.5) < 1e-12);
        CHECK(std::abs(t.K) < 1e-12);
    }
}

TEST_CASE("layer potentials on a grid") {
    std::mt19937_64 rng(31);
    const Grid g = Grid::make(2, 6, 6);
    const auto A = dirac::CoefficientMatrix::constant(dirac::random_elliptic(2, rng));
    dirac::DiracSymbolFamily fam(g, A);
    dirac::SpectralProjectorSet proj(fam);
    const ScalarField f = oracle::random_field(g, rng);
    const auto nodes = geometric_nodes(1e-3, 2.0, 10.0);
    const auto up = layer_potentials(f, proj, nodes, LayerKind::single, HalfSpace::upper);
    const auto lo = layer_potentials(f, proj, nodes, LayerKind::single, HalfSpace::lower);
    CHECK((up.traces.dnS0_plus - up.traces.dnS0_minus - to_physical(map_modes(to_spectral(f), [](std::size_t i, cd v) {
               return i == 0 ? cd(0.0) : v;
           }))).norm() < 1e-10 * f.norm());
    // the single layer is continuous
    CHECK((up.values.fields[0] - up.traces.S0).norm() < 1e-2 * up.traces.S0.norm());
    CHECK((lo.values.fields[0] - up.traces.S0).norm() < 1e-2 * up.traces.S0.norm());
    const auto D = layer_potentials(f, proj, nodes, LayerKind::double_layer, HalfSpace::upper);
    CHECK((D.traces.K - 0.5 * (D.traces.D0_plus + D.traces.D0_minus)).norm() < 1e-12 * f.norm());

    // D_A S_lambda f from the conormal profile matches the reconstruction of the scalar
    const auto C = layer_conormal(f, proj, nodes, LayerKind::single, HalfSpace::upper);
    const auto R = potential_reconstruct(C, A);
    CHECK(max_relative_error_mod_constant(R.u, up.values) < 1e-10);
    const auto Cl = layer_conormal(f, proj, nodes, LayerKind::double_layer, HalfSpace::lower);
    const auto Rl = potential_reconstruct(Cl, A);
    CHECK(max_relative_error_mod_constant(Rl.u, layer_potentials(f, proj, nodes, LayerKind::double_layer, HalfSpace::lower).values) <
          1e-10);
}

TEST_CASE("chi+ from layer traces") {
    std::mt19937_64 rng(41);
    const Grid g = Grid::make(1, 8, 8);
    for (int trial = 0; trial < 3; ++trial) {
        const Mat A = dirac::random_elliptic(1, rng);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.points(); ++i) {
            const Frequency f = g.frequency(i);
            if (f.is_zero()) continue;
            const ModeOperator op(f, dirac::coefficient_multiplier(A), 1);
            worst = std::max(worst, (chi_plus_from_layers(op) - range_coordinates(op.chi_plus(), f, 1)).norm());
            worst = std::max(worst, (chi_minus_from_layers(op) - range_coordinates(op.chi_minus(), f, 1)).norm());
        }
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("duality and the abstract Green formula") {
    std::mt19937_64 rng(51);
    double s_res = 0.0, d_res = 0.0, green = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 2;
        const Mat m = dirac::coefficient_multiplier(dirac::random_elliptic(n, rng));
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        const Frequency f = make_frequency(random_xi(n, rng), u(rng));
        const ModeOperator F(f, m, n), B(f, m, n, Equation::backward);
        for (double l : {0.1, 0.9, -0.4}) {
            s_res = std::max(s_res, std::abs(F.single_layer(l) - std::conj(B.single_layer(-l))));
            d_res = std::max(d_res, std::abs(F.double_layer(l) - std::conj(B.single_layer_conormal(-l)(0))));
        }
        const auto v = oracle::random_vector(static_cast<std::size_t>(n + 2), rng);
        const Vec e = Eigen::Map<const Vec>(v.data(), n + 2);
        const Vec h = F.chi_plus() * F.p() * e;
        const Vec gg = B.chi_plus() * B.p() * e;
        const cd lhs = h(0) * std::conj(B.boundary_value(gg));
        const cd rhs = F.boundary_value(h) * std::conj(gg(0));
        green = std::max(green, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300));
    }
    CHECK(s_res < 1e-9);
    CHECK(d_res < 1e-9);
    CHECK(green < 1e-9);
}

TEST_CASE("oracle agreement over random triples") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double ext = 0.0, dtn = 0.0, trace = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 2;
        const Mat A = dirac::random_elliptic(n, rng);
        const auto xi = random_xi(n, rng);
        const double tau = u(rng);
        const Frequency f = make_frequency(xi, tau);
        const ModeOperator op(f, dirac::coefficient_multiplier(A), n);
        for (HalfSpace side : {HalfSpace::upper, HalfSpace::lower}) {
            const auto o = per_mode_bvp_oracle(A, xi, tau, DataKind::dirichlet, 1.0, side);
            const double sg = side == HalfSpace::upper ? 1.0 : -1.0;
            // the conormal of the decaying solution spans the spectral subspace
            const Vec h = conormal_of(A, f, o.u0, o.du(0.0));
            const Mat& chi = side == HalfSpace::upper ? op.chi_plus() : op.chi_minus();
            ext = std::max(ext, (chi * h - h).norm() / h.norm());
            for (double l : {0.05, 0.5, 2.0}) {
                const Vec F = op.cauchy(sg * l) * h;
                const Vec ref = conormal_of(A, f, o.u(sg * l), o.du(sg * l));
                ext = std::max(ext, (F - ref).norm() / h.norm());
            }
        }
        const Mat p = dirac::dirac_symbol(f, n), m = dirac::coefficient_multiplier(A);
        const auto P = dirac::mode_projectors(dirac::ModeSymbols{f, p, p * m, m * p}, n);
        const auto o_up = per_mode_bvp_oracle(A, xi, tau, DataKind::dirichlet, 1.0);
        const cd gdn = P.spr / (1.0 - P.spp);
        dtn = std::max(dtn, std::abs(gdn * dirac::d_r(f) - o_up.dtn) / std::abs(o_up.dtn));
        const auto o = per_mode_bvp_oracle(A, xi, tau, DataKind::dirichlet, 1.0);
        const LayerTraces t = op.traces();
        trace = std::max(trace, std::abs(t.S0 - o.single_layer_trace) / std::abs(o.single_layer_trace));
        trace = std::max(trace, std::abs(t.dnS0_plus - o.dtn * o.single_layer_trace));
        const auto ol = per_mode_bvp_oracle(A, xi, tau, DataKind::dirichlet, 1.0, HalfSpace::lower);
        trace = std::max(trace, std::abs(t.dnS0_minus - ol.dtn * o.single_layer_trace));
    }
    CHECK(ext < 1e-8);
    CHECK(dtn < 1e-8);
    CHECK(trace < 1e-8);
}

TEST_CASE("Dirichlet and Neumann maps") {
    std::mt19937_64 rng(71);
    const Grid g = Grid::make(1, 8, 8);
    for (int trial = 0; trial < 4; ++trial) {
        const Mat A = trial == 0 ? dirac::identity_coefficients(1) : dirac::random_elliptic(1, rng);
        dirac::DiracSymbolFamily fam(g, dirac::CoefficientMatrix::constant(A));
        dirac::SpectralProjectorSet proj(fam);
        const DtnOperators D = dtn_operators(proj);
        CHECK(D.factorization_residual < 1e-9);
        CHECK(D.inverse_residual < 1e-9);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.points(); ++i) {
            const Frequency f = g.frequency(i);
            if (f.is_zero()) continue;
            const std::array<double, kMaxSpatialDim> xi{f.xi[0], 0, 0};
            const auto up = per_mode_bvp_oracle(A, xi, f.tau, DataKind::dirichlet, 1.0);
            const auto lo = per_mode_bvp_oracle(A, xi, f.tau, DataKind::dirichlet, 1.0, HalfSpace::lower);
            if (!D.singular_upper[i]) worst = std::max(worst, std::abs(D.dn_upper[i] * dirac::d_r(f) - up.dtn) / std::abs(up.dtn));
            if (!D.singular_lower[i]) worst = std::max(worst, std::abs(D.dn_lower[i] * dirac::d_r(f) - lo.dtn) / std::abs(lo.dtn));
            if (trial == 0) CHECK(std::abs(up.dtn + std::sqrt(f.parabolic())) < 1e-12);
        }
        CHECK(worst < 1e-8);
    }
    // heat at (1,0)
    const Grid g1 = Grid::make(1, 8, 8);
    dirac::SpectralProjectorSet heat{dirac::DiracSymbolFamily(g1)};
    const auto D = dtn_operators(heat);
    const std::size_t k1 = flat_of(g1, 1, 0);
    CHECK(std::abs(D.nd_upper[k1] + I) < 1e-12);
    CHECK(std::abs(D.dn_upper[k1] - I) < 1e-12);
    CHECK(D.excluded_upper == 0);
}

TEST_CASE("Green representation") {
    std::mt19937_64 rng(81);
    const Grid g = Grid::make(1, 8, 8);
    const auto nodes = geometric_nodes(1e-3, 1.5, 20.0);
    for (int trial = 0; trial < 3; ++trial) {
        const Mat Am = trial == 0 ? dirac::identity_coefficients(1) : dirac::random_elliptic(1, rng);
        const auto A = dirac::CoefficientMatrix::constant(Am);
        dirac::DiracSymbolFamily fam(g, A);
        dirac::SpectralProjectorSet proj(fam);
        const ConormalField h = dirac::random_compatible_field(g, rng);
        for (HalfSpace side : {HalfSpace::upper, HalfSpace::lower}) {
            const auto F = cauchy_extension({h, -0.5, side}, proj, nodes);
            const auto u = potential_reconstruct(F, A).u;
            const ConormalField h0 = map_modes(h, [&](std::size_t i, const Vec& v) {
                return Vec((side == HalfSpace::upper ? proj[i].chi_plus : proj[i].chi_minus) * v);
            });
            const auto tr = boundary_traces(h0);
            const auto G = greens_reconstruct(tr.value, tr.conormal, proj, nodes, side);
            CHECK(max_relative_error_mod_constant(G, u) < 1e-6);
        }
        // zero traces give a constant
        const auto Z = greens_reconstruct(ScalarField(g), ScalarField(g), proj, nodes);
        for (const auto& z : Z.fields) CHECK(z.norm() == 0.0);
    }
}

TEST_CASE("whole-space inverse") {
    std::mt19937_64 rng(91);
    const Grid g = Grid::make(1, 8, 8);
    ScalarField f = to_spectral(oracle::random_field(g, rng));
    f[0] = 0.0;
    f = to_physical(f);
    dirac::DiracSymbolFamily heat(g);
    const double eps = 1e-3, R = 1e2;

    // closed form for heat: -(e^{-eps rho} - e^{-R rho}) / rho^2 with rho^2 = |xi|^2 + i tau
    const ScalarField ref = map_modes(f, [&](std::size_t i, cd v) {
        const Frequency q = g.frequency(i);
        if (q.is_zero()) return cd(0.0);
        const cd rho = std::sqrt(q.parabolic());
        return -(std::exp(-eps * rho) - std::exp(-R * rho)) / (rho * rho) * v;
    });
    CHECK((inverse_whole_space_exact(f, heat, eps, R) - ref).norm() < 1e-12 * ref.norm());
    CHECK((inverse_whole_space(f, heat, eps, R) - ref).norm() < 1e-6 * ref.norm());
    CHECK(inverse_whole_space(f, heat, 0.5, 0.5).norm() == 0.0);

    const auto A = dirac::CoefficientMatrix::constant(dirac::random_elliptic(1, rng));
    dirac::DiracSymbolFamily fam(g, A);
    const ScalarField q = inverse_whole_space(f, fam, eps, R);
    CHECK((q - inverse_whole_space_exact(f, fam, eps, R)).norm() < 1e-6 * q.norm());
    // -L of the truncated integral approaches f as the window widens
    double prev = 1e300;
    for (auto [e, r] : {std::pair{1e-1, 1e1}, {1e-2, 1e2}, {1e-3, 1e3}}) {
        const double err = (apply_parabolic_operator(inverse_whole_space_exact(f, fam, e, r), fam) + f).norm() / f.norm();
        CHECK(err < prev);
        prev = err;
    }
    ScalarField with_mean = f + ScalarField(g, std::vector<cd>(g.points(), cd(1.0)), Space::physical);
    CHECK_THROWS_AS(inverse_whole_space(with_mean, heat, eps, R), UsageError);
}
