#include "energy/kato.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <cblas.h>
#include <lapacke.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::energy {

namespace {

dirac::Mat spatial_block(const dirac::Mat& a, int n) {
    if (a.rows() == n) return a;
    return a.block(1, 1, n, n);
}

Eigen::VectorXcd as_vector(const ScalarField& f) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) v(static_cast<Eigen::Index>(i)) = f[i];
    return v;
}

ScalarField as_field(const Grid& g, const Eigen::VectorXcd& v) {
    ScalarField f(g);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = v(static_cast<Eigen::Index>(i));
    return f;
}

double gradient_norm2(const ScalarField& u) {
    const ScalarField uh = to_spectral(u);
    double acc = 0.0;
    for (int k = 0; k < u.grid().n; ++k) {
        const double nk = apply_symbol(symbols::gradient(k), uh).norm();
        acc += nk * nk;
    }
    return acc;
}

ScalarField random_mean_free(const Grid& g, std::mt19937_64& rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    ScalarField u(g);
    cd mean = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = {N(rng), N(rng)};
        mean += u[i];
    }
    mean /= static_cast<double>(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] -= mean;
    return u;
}

}  // namespace

ScalarField KatoOperator::apply(const ScalarField& u) const {
    return as_field(grid, L * as_vector(to_physical(u)));
}

KatoOperator assemble_parabolic_L(const dirac::CoefficientMatrix& A, const Grid& g) {
    g.validate();
    const std::size_t P = g.points();
    if (P > kDenseLimit) throw UsageError("assemble_parabolic_L: " + std::to_string(P) + " points exceed the dense limit");
    const int n = g.n;
    if (A.n() != n && A.at(0).rows() != n) throw UsageError("assemble_parabolic_L: coefficient dimension mismatch");
    if (!A.is_constant() && !(A.grid() == g)) throw UsageError("assemble_parabolic_L: coefficients sampled on another grid");

    KatoOperator op;
    op.grid = g;
    op.kappa = std::numeric_limits<double>::infinity();
    std::vector<dirac::Mat> a(A.sample_count());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = spatial_block(A.at(i), n);
        op.kappa = std::min(op.kappa, dirac::ellipticity_lower(a[i]));
    }
    const auto at = [&](std::size_t i) -> const dirac::Mat& { return a[A.is_constant() ? 0 : i]; };

    op.L.resize(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(P));
    for (std::size_t j = 0; j < P; ++j) {
        ScalarField e(g);
        e[j] = 1.0;
        const ScalarField eh = to_spectral(e);
        std::vector<ScalarField> grad;
        for (int k = 0; k < n; ++k) grad.push_back(to_physical(apply_symbol(symbols::gradient(k), eh)));
        ScalarField col = apply_symbol(symbols::time_derivative(), eh);
        for (int r = 0; r < n; ++r) {
            ScalarField flux(g);
            for (std::size_t i = 0; i < P; ++i) {
                cd acc = 0.0;
                for (int c = 0; c < n; ++c) acc += at(i)(r, c) * grad[static_cast<std::size_t>(c)][i];
                flux[i] = acc;
            }
            col -= apply_symbol(symbols::gradient(r), to_spectral(flux));
        }
        op.L.col(static_cast<Eigen::Index>(j)) = as_vector(to_physical(col));
    }
    return op;
}

double accretivity_margin(const KatoOperator& op, int trials, std::mt19937_64& rng) {
    double worst = std::numeric_limits<double>::infinity();
    const double vol = op.grid.cell_volume();
    for (int t = 0; t < trials; ++t) {
        ScalarField u = random_mean_free(op.grid, rng);
        const double g2 = gradient_norm2(u);
        u *= cd(1.0 / std::sqrt(g2));
        const Eigen::VectorXcd v = as_vector(u);
        const double re = (v.dot(op.L * v)).real() * vol;
        worst = std::min(worst, re - op.kappa);
    }
    return worst;
}

KatoSqrt kato_sqrt(const KatoOperator& op) {
    const lapack_int N = static_cast<lapack_int>(op.L.rows());
    Eigen::MatrixXcd T = op.L;
    Eigen::MatrixXcd Z(N, N);
    Eigen::VectorXcd w(N);
    lapack_int sdim = 0;
    const lapack_int info = LAPACKE_zgees(LAPACK_COL_MAJOR, 'V', 'N', nullptr, N, T.data(), N, &sdim, w.data(),
                                          Z.data(), N);
    if (info != 0) throw InternalError("kato_sqrt: Schur decomposition failed, info " + std::to_string(info));

    KatoSqrt out;
    out.min_real_eig = std::numeric_limits<double>::infinity();
    for (lapack_int i = 0; i < N; ++i) out.min_real_eig = std::min(out.min_real_eig, w(i).real());
    if (out.min_real_eig < -1e-10)
        throw AccretivityError("kato_sqrt: eigenvalue with real part " + std::to_string(out.min_real_eig));
    // x-independent modes give eigenvalues i tau; only the closed negative axis is excluded
    for (lapack_int i = 0; i < N; ++i)
        if (w(i).real() <= 0.0 && std::abs(w(i).imag()) <= 1e-10 && std::abs(w(i)) > 1e-8)
            throw AccretivityError("kato_sqrt: eigenvalue on the negative real axis");

    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
    Eigen::matrix_sqrt_triangular(T, S);

    const cd one(1.0), zero(0.0);
    Eigen::MatrixXcd ZS(N, N);
    out.R.resize(N, N);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, N, N, N, &one, Z.data(), N, S.data(), N, &zero, ZS.data(), N);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasConjTrans, N, N, N, &one, ZS.data(), N, Z.data(), N, &zero,
                out.R.data(), N);

    Eigen::MatrixXcd R2(N, N);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, N, N, N, &one, out.R.data(), N, out.R.data(), N, &zero,
                R2.data(), N);
    out.residual = (R2 - op.L).norm() / op.L.norm();
    return out;
}

KatoRatios kato_sqrt_ratio(const KatoOperator& op, int trials, std::mt19937_64& rng) {
    return kato_sqrt_ratio(op, kato_sqrt(op), trials, rng);
}

KatoRatios kato_sqrt_ratio(const KatoOperator& op, const KatoSqrt& root, int trials, std::mt19937_64& rng) {
    KatoRatios r;
    r.sqrt_residual = root.residual;
    r.min_real_eig = root.min_real_eig;
    r.min_ratio = std::numeric_limits<double>::infinity();
    r.max_ratio = 0.0;
    const double vol = op.grid.cell_volume();
    for (int t = 0; t < trials; ++t) {
        const ScalarField u = random_mean_free(op.grid, rng);
        const double num = std::sqrt(vol) * (root.R * as_vector(u)).norm();
        const double half = apply_symbol(symbols::half_derivative(), to_spectral(u)).norm();
        const double den = std::sqrt(gradient_norm2(u) + half * half);
        const double q = num / den;
        r.min_ratio = std::min(r.min_ratio, q);
        r.max_ratio = std::max(r.max_ratio, q);
    }
    return r;
}

}  // namespace pdir::energy
