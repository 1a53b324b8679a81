#include "dirac/projectors.hpp"

#include <cmath>

#include "spectral/errors.hpp"

namespace pdir::dirac {

ModeProjectors mode_projectors(const ModeSymbols& s, int n) {
    const int d = n + 2;
    ModeProjectors P;
    P.f = s.f;
    const std::string where = describe(s.f, n);
    if (s.f.is_zero()) {
        P.zero_mode = true;
        P.chi_plus = P.chi_minus = P.pi_ran = P.sgn = Mat::Zero(d, d);
    } else {
        P.chi_plus = matrix_function(s.pm, funcs::chi_plus(), where);
        P.chi_minus = matrix_function(s.pm, funcs::chi_minus(), where);
        P.pi_ran = P.chi_plus + P.chi_minus;
        P.sgn = P.chi_plus - P.chi_minus;
    }
    P.s_pp = P.sgn.block(0, 0, 1, 1);
    P.s_pr = P.sgn.block(0, 1, 1, d - 1);
    P.s_rp = P.sgn.block(1, 0, d - 1, 1);
    P.s_rr = P.sgn.block(1, 1, d - 1, d - 1);
    if (!P.zero_mode) {
        const Vec ep = e_perp(n), er = e_r(s.f, n);
        const Vec a = P.sgn * ep, b = P.sgn * er;
        P.spp = a(0);
        P.srp = er.tail(d - 1).dot(a.tail(d - 1));
        P.spr = b(0);
        P.srr = er.tail(d - 1).dot(b.tail(d - 1));
    }
    return P;
}

SpectralProjectorSet::SpectralProjectorSet(const DiracSymbolFamily& fam) : fam_(fam) {
    const std::size_t N = fam.grid().points();
    modes_.reserve(N);
    for (std::size_t i = 0; i < N; ++i) modes_.push_back(mode_projectors(fam.mode(i), fam.n()));
}

double SpectralProjectorSet::algebra_residual() const {
    double worst = 0.0;
    for (const auto& P : modes_) {
        if (P.zero_mode) continue;
        const double s = std::max(P.pi_ran.norm(), 1.0);
        const double r = std::max({(P.chi_plus + P.chi_minus - P.pi_ran).norm(), (P.chi_plus * P.chi_plus - P.chi_plus).norm(),
                                   (P.chi_minus * P.chi_minus - P.chi_minus).norm(), (P.chi_plus * P.chi_minus).norm(),
                                   (P.sgn * P.sgn - P.pi_ran).norm()});
        worst = std::max(worst, r / s);
    }
    return worst;
}

double SpectralProjectorSet::diagonal_block_size() const {
    double worst = 0.0;
    for (const auto& P : modes_) worst = std::max({worst, P.s_pp.norm(), P.s_rr.norm()});
    return worst;
}

Mat resolvent(const Mat& pm, double lambda, const std::string& where) {
    const Mat R = Mat::Identity(pm.rows(), pm.cols()) + cd(0.0, lambda) * pm;
    Eigen::JacobiSVD<Mat> svd(R);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-12 * sv(0)) throw ConditioningError("resolvent: singular at " + where);
    return R.partialPivLu().inverse();
}

double sector_angle(const DiracSymbolFamily& fam) {
    double w = 0.0;
    for (std::size_t i = 0; i < fam.grid().points(); ++i) {
        const auto s = fam.mode(i);
        if (s.f.is_zero()) continue;
        Eigen::ComplexEigenSolver<Mat> es(s.pm, false);
        const double scale = std::max(s.pm.cwiseAbs().maxCoeff(), 1e-300);
        for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
            const cd mu = es.eigenvalues()(k);
            if (std::abs(mu) <= 1e-8 * scale) continue;
            w = std::max(w, std::atan2(std::abs(mu.imag()), std::abs(mu.real())));
        }
    }
    return w;
}

double resolvent_bound(const DiracSymbolFamily& fam, const std::vector<double>& lambdas) {
    double b = 0.0;
    for (std::size_t i = 0; i < fam.grid().points(); ++i) {
        const auto s = fam.mode(i);
        for (double l : lambdas) {
            const Mat R = resolvent(s.pm, l, describe(s.f, fam.n()));
            b = std::max(b, Eigen::JacobiSVD<Mat>(R).singularValues()(0));
        }
    }
    return b;
}

}  // namespace pdir::dirac
