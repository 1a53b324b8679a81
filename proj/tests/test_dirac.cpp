#include <cmath>
#include <random>

#include "dirac/coefficients.hpp"
#include "dirac/matrix_function.hpp"
#include "dirac/projectors.hpp"
#include "dirac/scales.hpp"
#include "dirac/symbol_family.hpp"
#include "doctest.h"
#include "spectral/errors.hpp"
#include "spectral/norms.hpp"

using namespace pdir;
using namespace pdir::dirac;

namespace {

const cd I(0.0, 1.0);

Frequency freq1(double xi, double tau) {
    Frequency f;
    f.xi[0] = xi;
    f.tau = tau;
    f.k[0] = static_cast<int>(xi);
    f.m = tau > 0 ? 1 : (tau < 0 ? -1 : 0);
    return f;
}

}  // namespace

TEST_CASE("hat transform") {
    CHECK((hat_transform(identity_coefficients(2)) - identity_coefficients(2)).norm() == 0.0);
    Mat A(2, 2);
    A << 2.0, 0.0, 0.0, 3.0;
    Mat expect(2, 2);
    expect << 0.5, 0.0, 0.0, 3.0;
    CHECK((hat_transform(A) - expect).norm() < 1e-15);

    std::mt19937_64 rng(1);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Mat B = random_elliptic(1 + t % 2, rng);
        worst = std::max(worst, (hat_transform(hat_transform(B)) - B).cwiseAbs().maxCoeff());
        CHECK(ellipticity_lower(hat_transform(B)) > 0.0);
    }
    CHECK(worst <= 1e-12);

    Mat S = Mat::Identity(2, 2);
    S(0, 0) = 0.0;
    CHECK_THROWS_AS(hat_transform(S), DomainError);
}

TEST_CASE("coefficient matrix metadata") {
    std::mt19937_64 rng(2);
    const auto A = CoefficientMatrix::constant(random_elliptic(2, rng));
    CHECK(A.kappa() >= 1.0 - 1e-12);
    CHECK(A.Cbound() <= 3.0 + 1e-12);
    CHECK(A.has(Structure::constant));
    CHECK(CoefficientMatrix::constant(random_block_elliptic(2, rng)).has(Structure::block));
    CHECK(CoefficientMatrix::constant(random_hermitian_elliptic(2, rng)).has(Structure::hermitian));
    Mat U = identity_coefficients(1);
    U(0, 1) = 0.3;
    const auto Ut = CoefficientMatrix::constant(U);
    CHECK(Ut.has(Structure::upper_triangular));
    CHECK_FALSE(Ut.has(Structure::lower_triangular));
    Mat bad = -identity_coefficients(1);
    CHECK_THROWS_AS(CoefficientMatrix::constant(bad), DomainError);

    const Grid g = Grid::make(1, 4, 4);
    const auto R = random_rough(g, rng);
    CHECK(R.kappa() >= 1.0 - 1e-12);
    CHECK(R.Cbound() <= 4.0);
    CHECK_THROWS_AS(R.value(), UsageError);
    CHECK_THROWS_AS(DiracSymbolFamily(g, R), UsageError);
}

TEST_CASE("Dirac symbol examples") {
    CHECK(dirac_symbol(Frequency{}, 2).norm() == 0.0);
    const Mat p = dirac_symbol(freq1(1, 0), 1);
    Mat expect(3, 3);
    expect << 0, I, 0, -I, 0, 0, 0, 0, 0;
    CHECK((p - expect).norm() == 0.0);
    Eigen::ComplexEigenSolver<Mat> es(p);
    std::vector<double> ev;
    for (int i = 0; i < 3; ++i) ev.push_back(es.eigenvalues()(i).real());
    std::sort(ev.begin(), ev.end());
    CHECK(ev[0] == doctest::Approx(-1));
    CHECK(std::abs(ev[1]) < 1e-14);
    CHECK(ev[2] == doctest::Approx(1));

    const Mat q = dirac_symbol(freq1(0, 1), 1);
    Mat d2 = Mat::Zero(3, 3);
    d2(0, 0) = I;
    d2(2, 2) = I;
    CHECK((q * q - d2).norm() < 1e-15);
}

TEST_CASE("symbol square identity on a 32x32 grid") {
    const Grid g = Grid::make(1, 32, 32);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        const auto f = g.frequency(i);
        const Mat p = dirac_symbol(f, 1);
        const Mat pi = f.is_zero() ? Mat::Zero(3, 3) : matrix_function(p, funcs::range_indicator());
        worst = std::max(worst, (p * p - f.parabolic() * pi).norm() / std::max(1.0, std::abs(f.parabolic())));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("adjoint, reflection and backward multiplier") {
    std::mt19937_64 rng(3);
    const Grid g = Grid::make(2, 8, 8);
    const Mat N = reflection(2);
    CHECK((N * N - Mat::Identity(4, 4)).norm() == 0.0);
    for (std::size_t i = 0; i < g.points(); ++i) {
        const auto f = g.frequency(i);
        const Mat p = dirac_symbol(f, 2);
        CHECK((dirac_symbol_adjoint(f, 2) - p.adjoint()).norm() == 0.0);
        CHECK((p.adjoint() * N + N * p - adjoint_anticommutator(f, 2)).norm() <= 1e-12);
    }
    CHECK((coefficient_multiplier(identity_coefficients(2)) - Mat::Identity(4, 4)).norm() == 0.0);
    const Mat m = coefficient_multiplier(random_block_elliptic(2, rng));
    CHECK(m.block(0, 1, 1, 3).norm() == 0.0);
    CHECK(m.block(1, 0, 3, 1).norm() == 0.0);
    const Mat A = random_elliptic(2, rng);
    const Mat mt = backward_multiplier(coefficient_multiplier(A));
    CHECK(ellipticity_lower(mt) > 0.0);
    CHECK(ellipticity_lower(mt.block(0, 0, 3, 3)) == doctest::Approx(ellipticity_lower(hat_transform(A).adjoint())));
}

TEST_CASE("matrix function examples") {
    std::mt19937_64 rng(4);
    const Grid g = Grid::make(1, 8, 8);
    const DiracSymbolFamily fam(g, CoefficientMatrix::constant(random_elliptic(1, rng)));
    for (std::size_t i = 1; i < g.points(); i += 7) {
        const auto s = fam.mode(i);
        CHECK((matrix_function(s.pm, funcs::one()) - Mat::Identity(3, 3)).norm() < 1e-12);
        CHECK((matrix_function(s.pm, funcs::identity()) - s.pm).norm() <= 1e-12 * std::max(1.0, s.pm.norm()));
    }
    const Mat p = dirac_symbol(freq1(1, 0), 1);
    Mat expect(3, 3);
    expect << 1, I, 0, -I, 1, 0, 0, 0, 0;
    expect *= 0.5;
    CHECK((matrix_function(p, funcs::chi_plus()) - expect).norm() < 1e-14);
}

TEST_CASE("Schur-Parlett fallback") {
    std::mt19937_64 rng(5);
    const Grid g = Grid::make(2, 4, 4);
    const DiracSymbolFamily fam(g, CoefficientMatrix::constant(random_elliptic(2, rng)));
    for (std::size_t i = 1; i < g.points(); ++i) {
        const auto s = fam.mode(i);
        for (const auto& b : {funcs::sgn(), funcs::exp_bracket(0.3), funcs::bracket_power(-0.5)}) {
            const Mat a = matrix_function(s.pm, b), c = schur_parlett(s.pm, b);
            CHECK((a - c).norm() <= 1e-9 * std::max(1.0, a.norm()));
        }
    }
    Mat J(2, 2);
    J << 2.0, 1.0, 0.0, 2.0;
    const auto r = matrix_function_ex(J, funcs::exp_bracket(0.5));
    CHECK(r.path == MatrixFunctionPath::schur_parlett);
    Mat ex(2, 2);
    ex << 1.0, -0.5, 0.0, 1.0;
    ex *= std::exp(-1.0);
    CHECK((r.value - ex).norm() < 1e-10);
}

TEST_CASE("spectral projectors") {
    std::mt19937_64 rng(6);
    const Grid g = Grid::make(1, 8, 8);
    for (int t = 0; t < 10; ++t) {
        const SpectralProjectorSet P(DiracSymbolFamily(g, CoefficientMatrix::constant(random_elliptic(1, rng))));
        CHECK(P.algebra_residual() <= 1e-10);
    }
    const Grid g2 = Grid::make(2, 4, 8);
    for (int t = 0; t < 3; ++t) {
        const SpectralProjectorSet P(DiracSymbolFamily(g2, CoefficientMatrix::constant(random_block_elliptic(2, rng))));
        CHECK(P.diagonal_block_size() <= 1e-10);
        CHECK(P.algebra_residual() <= 1e-10);
    }
    const auto heat = mode_projectors(DiracSymbolFamily(g).mode(freq1(1, 0)), 1);
    Mat expect(3, 3);
    expect << 0, I, 0, -I, 0, 0, 0, 0, 0;
    CHECK((heat.sgn - expect).norm() < 1e-14);
    CHECK(std::abs(heat.spr - I) < 1e-14);
    CHECK(std::abs(heat.srp + I) < 1e-14);
}

TEST_CASE("resolvent") {
    std::mt19937_64 rng(7);
    const Grid g = Grid::make(1, 8, 8);
    const DiracSymbolFamily fam(g, CoefficientMatrix::constant(random_elliptic(1, rng)));
    const auto s = fam.mode(9);
    CHECK((resolvent(s.pm, 0.0) - Mat::Identity(3, 3)).norm() == 0.0);
    const Mat R = resolvent(s.pm, 0.7);
    CHECK((R * (Mat::Identity(3, 3) + cd(0, 0.7) * s.pm) - Mat::Identity(3, 3)).norm() < 1e-12);
    std::vector<double> ls;
    for (int k = -3; k <= 3; ++k) ls.push_back(std::pow(10.0, k));
    const double b = resolvent_bound(fam, ls);
    CHECK(std::isfinite(b));
    CHECK(b >= 1.0);
}

TEST_CASE("operator-adapted Sobolev scales") {
    std::mt19937_64 rng(8);
    const Grid g = Grid::make(1, 8, 8);
    const DiracSymbolFamily heat(g);
    const auto h = random_compatible_field(g, rng);
    CHECK(h.compatibility_residual() < 1e-12);
    // s = 0: pi_ran h, and h in ran(P) up to its zero mode
    CHECK(sobolev_scale_norm(h, 0.0, ScaleOperator::P, heat) == doctest::Approx(h.norm()).epsilon(1e-10));
    for (double s : {-1.0, -0.5, -0.25}) {
        double comp = 0.0;
        for (int c = 0; c < h.ncomp(); ++c) comp += std::pow(parabolic_sobolev_norm(h[c], s / 2), 2);
        CHECK(std::abs(sobolev_scale_norm(h, s, ScaleOperator::P, heat) - std::sqrt(comp)) <= 1e-10 * std::sqrt(comp));
    }
    double lo = INFINITY, hi = 0.0;
    for (int t = 0; t < 5; ++t) {
        const DiracSymbolFamily fam(g, CoefficientMatrix::constant(random_elliptic(1, rng)));
        for (int k = 0; k < 4; ++k) {
            const auto hk = random_compatible_field(g, rng);
            const double r = sobolev_scale_norm(hk, -0.5, ScaleOperator::P, fam) / sobolev_scale_norm(hk, -0.5, ScaleOperator::PM, fam);
            lo = std::min(lo, r), hi = std::max(hi, r);
        }
    }
    MESSAGE("P/PM scale ratio band [" << lo << ", " << hi << "]");
    CHECK(lo > 0.1);
    CHECK(hi < 10.0);
    ConormalField bad({h[0], h[0], h[0]});
    CHECK_THROWS_AS(sobolev_scale_norm(bad, -0.5, ScaleOperator::P, heat), DomainError);
}

TEST_CASE("intertwining, similarity, sector angle, Lipschitz") {
    std::mt19937_64 rng(9);
    const Grid g = Grid::make(2, 4, 8);
    const Mat A0 = random_elliptic(2, rng);
    const DiracSymbolFamily fam(g, CoefficientMatrix::constant(A0));
    for (std::size_t i = 1; i < g.points(); ++i) {
        const auto s = fam.mode(i);
        const Mat pip = matrix_function(s.p, funcs::range_indicator());
        const Mat pimp = matrix_function(s.mp, funcs::range_indicator());
        for (const auto& b : {funcs::sgn(), funcs::exp_bracket(0.4), funcs::chi_plus()}) {
            const Mat lhs = s.p * pip * matrix_function(s.mp, b) * pimp;
            const Mat rhs = matrix_function(s.pm, b) * s.p;
            CHECK((lhs - rhs).norm() <= 1e-10 * std::max(1.0, rhs.norm()));
        }
        CHECK((s.mp - fam.m() * s.pm * fam.m().inverse()).norm() <= 1e-12 * std::max(1.0, s.mp.norm()));
        Eigen::ComplexEigenSolver<Mat> a(s.pm, false), c(s.mp, false);
        std::vector<double> ea, ec;
        for (int k = 0; k < 4; ++k) ea.push_back(std::abs(a.eigenvalues()(k))), ec.push_back(std::abs(c.eigenvalues()(k)));
        std::sort(ea.begin(), ea.end());
        std::sort(ec.begin(), ec.end());
        for (int k = 0; k < 4; ++k) CHECK(std::abs(ea[static_cast<std::size_t>(k)] - ec[static_cast<std::size_t>(k)]) <= 1e-10 * (1 + ea[3]));
    }
    const double w = sector_angle(fam);
    MESSAGE("sector angle " << w);
    CHECK(w < M_PI / 2);

    const Mat E = random_elliptic(2, rng) * 0.1;
    const SpectralProjectorSet P0(fam);
    double slope = 0.0;
    for (double t : {0.05, 0.1, 0.2}) {
        const Mat At = A0 + t * E;
        const SpectralProjectorSet Pt(DiracSymbolFamily(g, CoefficientMatrix::constant(At)));
        double d = 0.0;
        for (std::size_t i = 0; i < P0.size(); ++i) d = std::max(d, (Pt[i].sgn - P0[i].sgn).norm());
        slope = std::max(slope, d / (At - A0).cwiseAbs().maxCoeff());
    }
    MESSAGE("Lipschitz slope " << slope);
    CHECK(std::isfinite(slope));
    CHECK(slope < 1e3);
}
