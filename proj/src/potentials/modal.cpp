#include "potentials/modal.hpp"

#include <cmath>

#include "dirac/scales.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::potentials {

using dirac::matrix_function;
namespace funcs = dirac::funcs;

Frequency make_frequency(const std::array<double, kMaxSpatialDim>& xi, double tau) {
    Frequency f;
    f.xi = xi;
    f.tau = tau;
    auto mark = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    for (std::size_t j = 0; j < xi.size(); ++j) f.k[j] = mark(xi[j]);
    f.m = mark(tau);
    return f;
}

ModeOperator::ModeOperator(const Frequency& f, const Mat& m, int n, Equation eq) : f_(f), n_(n) {
    const int d = n + 2;
    if (m.rows() != d || m.cols() != d) throw UsageError("ModeOperator: multiplier size does not match n");
    where_ = dirac::describe(f, n);
    if (eq == Equation::forward) {
        p_ = dirac::dirac_symbol(f, n);
        m_ = m;
    } else {
        p_ = dirac::dirac_symbol_adjoint(f, n);
        m_ = dirac::backward_multiplier(m);
    }
    pm_ = p_ * m_;
    mp_ = m_ * p_;
    zero_ = f.is_zero();
    if (zero_) {
        pinv_ = chi_plus_ = chi_minus_ = chi_plus_mp_ = chi_minus_mp_ = pi_p_ = pi_mp_ = Mat::Zero(d, d);
        return;
    }
    const cd z = eq == Equation::forward ? f.parabolic() : std::conj(f.parabolic());
    pinv_ = p_ / z;
    chi_plus_ = matrix_function(pm_, funcs::chi_plus(), where_);
    chi_minus_ = matrix_function(pm_, funcs::chi_minus(), where_);
    chi_plus_mp_ = matrix_function(mp_, funcs::chi_plus(), where_);
    chi_minus_mp_ = matrix_function(mp_, funcs::chi_minus(), where_);
    pi_p_ = pinv_ * p_;
    pi_mp_ = chi_plus_mp_ + chi_minus_mp_;
}

namespace {
void require_nonzero(double lambda) {
    if (lambda == 0.0) throw UsageError("layer multipliers at lambda = 0 are one-sided; use traces()");
}
dirac::SectorFunction cut_exponential(double lambda) {
    return lambda > 0 ? funcs::exp_chi_plus(lambda) : funcs::exp_chi_minus(-lambda);
}
}  // namespace

Mat ModeOperator::cauchy(double lambda) const {
    require_nonzero(lambda);
    if (zero_) return Mat::Zero(n_ + 2, n_ + 2);
    return matrix_function(pm_, cut_exponential(lambda), where_);
}

Mat ModeOperator::cauchy_mp(double lambda) const {
    require_nonzero(lambda);
    if (zero_) return Mat::Zero(n_ + 2, n_ + 2);
    return matrix_function(mp_, cut_exponential(lambda), where_);
}

cd ModeOperator::single_layer(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return -sg * (pinv_ * cauchy(lambda).col(0))(0);
}

cd ModeOperator::double_layer(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return -sg * (pi_p_ * cauchy_mp(lambda) * pi_mp_.col(0))(0);
}

cd ModeOperator::single_layer_derivative(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return sg * (pinv_ * pm_ * cauchy(lambda).col(0))(0);
}

cd ModeOperator::double_layer_derivative(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return sg * (pi_p_ * mp_ * cauchy_mp(lambda) * pi_mp_.col(0))(0);
}

Vec ModeOperator::single_layer_conormal(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return sg * cauchy(lambda).col(0);
}

Vec ModeOperator::double_layer_conormal(double lambda) const {
    const double sg = lambda > 0 ? 1.0 : -1.0;
    return sg * cauchy(lambda) * p_.col(0);
}

LayerTraces ModeOperator::traces() const {
    LayerTraces t;
    if (zero_) return t;
    t.S0 = -(pinv_ * chi_plus_.col(0))(0);
    t.D0_plus = -(pi_p_ * chi_plus_mp_ * pi_mp_.col(0))(0);
    t.D0_minus = (pi_p_ * chi_minus_mp_ * pi_mp_.col(0))(0);
    t.dnS0_plus = chi_plus_(0, 0);
    t.dnS0_minus = -chi_minus_(0, 0);
    t.dnD0 = (chi_plus_ * p_.col(0))(0);
    t.K = 0.5 * (t.D0_plus + t.D0_minus);
    return t;
}

cd ModeOperator::boundary_value(const Vec& h) const { return -(pinv_ * h)(0); }

Vec conormal_of(const Mat& A, const Frequency& f, cd u, cd du, Equation eq) {
    const int n = static_cast<int>(A.rows()) - 1;
    Vec F(n + 2);
    const cd I(0.0, 1.0);
    cd tang = 0.0;
    for (int j = 0; j < n; ++j) tang += A(0, 1 + j) * I * f.xi[static_cast<std::size_t>(j)];
    F(0) = A(0, 0) * du + tang * u;
    for (int j = 0; j < n; ++j) F(1 + j) = I * f.xi[static_cast<std::size_t>(j)] * u;
    const double a = std::sqrt(std::abs(f.tau));
    F(n + 1) = (eq == Equation::forward ? I * f.sgn_tau() * a : cd(a)) * u;
    return F;
}

Eigen::Matrix2cd range_coordinates(const Mat& T, const Frequency& f, int n) {
    const Vec b[2] = {dirac::e_perp(n), dirac::e_r(f, n)};
    Eigen::Matrix2cd C;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) C(r, c) = b[r].dot(T * b[c]);
    return C;
}

Eigen::Matrix2cd chi_plus_from_layers(const ModeOperator& op) {
    const LayerTraces t = op.traces();
    const cd dr = dirac::d_r(op.frequency());
    Eigen::Matrix2cd C;
    C << t.dnS0_plus, -t.dnD0 / dr, dr * t.S0, -t.D0_plus;
    return C;
}

Eigen::Matrix2cd chi_minus_from_layers(const ModeOperator& op) {
    const LayerTraces t = op.traces();
    const cd dr = dirac::d_r(op.frequency());
    Eigen::Matrix2cd C;
    C << -t.dnS0_minus, t.dnD0 / dr, -dr * t.S0, t.D0_minus;
    return C;
}

ScalarField map_modes(const ScalarField& f, const std::function<cd(std::size_t, cd)>& op) {
    ScalarField s = f.space() == Space::spectral ? f : to_spectral(f);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = op(i, s[i]);
    return f.space() == Space::spectral ? s : to_physical(s);
}

ConormalField map_modes(const ConormalField& h, const std::function<Vec(std::size_t, const Vec&)>& op) {
    auto v = dirac::modal_vectors(h);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(i, v[i]);
    return dirac::from_modal_vectors(h.grid(), v, h.space());
}

double max_relative_error_mod_constant(const ScalarProfile& a, const ScalarProfile& b) {
    if (a.size() != b.size()) throw UsageError("profile comparison: node counts differ");
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        ScalarField x = to_spectral(a.fields[j]), y = to_spectral(b.fields[j]);
        x[0] = 0.0;
        y[0] = 0.0;
        const double den = y.norm();
        const double num = (x - y).norm();
        if (den > 0) worst = std::max(worst, num / den);
        else worst = std::max(worst, num);
    }
    return worst;
}

}  // namespace pdir::potentials
