#include "dirac/coefficients.hpp"

#include <cmath>

#include "spectral/errors.hpp"

namespace pdir::dirac {

double ellipticity_lower(const Mat& A) {
    const Mat H = 0.5 * (A + A.adjoint());
    return Eigen::SelfAdjointEigenSolver<Mat>(H, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

double ellipticity_upper(const Mat& A) {
    return Eigen::JacobiSVD<Mat>(A).singularValues()(0);
}

CoefficientMatrix CoefficientMatrix::constant(const Mat& A) {
    if (A.rows() != A.cols() || A.rows() < 2 || A.rows() > kMaxSpatialDim + 1)
        throw UsageError("CoefficientMatrix: need a square matrix of size n+1 with 1 <= n <= 3");
    CoefficientMatrix c;
    c.n_ = static_cast<int>(A.rows()) - 1;
    c.samples_ = {A};
    c.measure();
    return c;
}

CoefficientMatrix CoefficientMatrix::sampled(const Grid& g, std::vector<Mat> values) {
    g.validate();
    if (values.size() != g.points()) throw UsageError("CoefficientMatrix: one sample per grid point required");
    for (const auto& A : values)
        if (A.rows() != g.n + 1 || A.cols() != g.n + 1) throw UsageError("CoefficientMatrix: sample size must be n+1");
    CoefficientMatrix c;
    c.n_ = g.n;
    c.grid_ = g;
    c.samples_ = std::move(values);
    c.measure();
    return c;
}

void CoefficientMatrix::measure() {
    kappa_ = INFINITY;
    C_ = 0.0;
    for (const auto& A : samples_) {
        kappa_ = std::min(kappa_, ellipticity_lower(A));
        C_ = std::max(C_, ellipticity_upper(A));
    }
    if (!(kappa_ > 0.0)) throw DomainError("CoefficientMatrix: not elliptic (kappa = " + std::to_string(kappa_) + ")");
}

const Mat& CoefficientMatrix::value() const {
    if (!is_constant()) throw UsageError("CoefficientMatrix: sampled coefficients on the constant-coefficient path");
    return samples_.front();
}

bool CoefficientMatrix::has(Structure s, double tol) const {
    const double t = tol * std::max(C_, 1.0);
    for (const auto& A : samples_) {
        const int m = n_;
        const double up = A.block(0, 1, 1, m).cwiseAbs().maxCoeff();
        const double lo = A.block(1, 0, m, 1).cwiseAbs().maxCoeff();
        switch (s) {
            case Structure::block:
                if (up > t || lo > t) return false;
                break;
            case Structure::upper_triangular:
                if (lo > t) return false;
                break;
            case Structure::lower_triangular:
                if (up > t) return false;
                break;
            case Structure::hermitian:
                if ((A - A.adjoint()).cwiseAbs().maxCoeff() > t) return false;
                break;
            case Structure::constant:
                if (!is_constant()) {
                    for (const auto& B : samples_)
                        if ((B - samples_.front()).cwiseAbs().maxCoeff() > t) return false;
                }
                break;
            case Structure::general:
                break;
        }
    }
    return true;
}

Mat hat_transform(const Mat& A) {
    const Eigen::Index m = A.rows() - 1;
    const cd a = A(0, 0);
    if (std::abs(a) <= 1e-12 * std::max(A.cwiseAbs().maxCoeff(), 1e-300))
        throw DomainError("hat_transform: A_perp,perp numerically singular");
    const cd ai = 1.0 / a;
    Mat H(A.rows(), A.cols());
    H(0, 0) = ai;
    H.block(0, 1, 1, m) = -ai * A.block(0, 1, 1, m);
    H.block(1, 0, m, 1) = A.block(1, 0, m, 1) * ai;
    H.block(1, 1, m, m) = A.block(1, 1, m, m) - A.block(1, 0, m, 1) * ai * A.block(0, 1, 1, m);
    return H;
}

CoefficientMatrix hat_transform(const CoefficientMatrix& A) {
    if (A.is_constant()) return CoefficientMatrix::constant(hat_transform(A.value()));
    std::vector<Mat> v;
    v.reserve(A.sample_count());
    for (std::size_t i = 0; i < A.sample_count(); ++i) v.push_back(hat_transform(A.at(i)));
    return CoefficientMatrix::sampled(A.grid(), std::move(v));
}

Mat identity_coefficients(int n) { return Mat::Identity(n + 1, n + 1); }

namespace {

Mat random_unitary(int d, std::mt19937_64& rng, bool real_only) {
    std::normal_distribution<double> nd;
    Mat G(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) G(i, j) = real_only ? cd(nd(rng)) : cd(nd(rng), nd(rng));
    Eigen::HouseholderQR<Mat> qr(G);
    return qr.householderQ() * Mat::Identity(d, d);
}

Mat random_skew(int d, std::mt19937_64& rng, double norm, bool real_only) {
    std::normal_distribution<double> nd;
    Mat G(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) G(i, j) = real_only ? cd(nd(rng)) : cd(nd(rng), nd(rng));
    Mat K = 0.5 * (G - G.adjoint());
    const double s = ellipticity_upper(K);
    return s > 0 ? Mat(K * (norm / s)) : K;
}

Mat positive_part(int d, std::mt19937_64& rng, bool real_only) {
    std::uniform_real_distribution<double> U(1.0, 2.0);
    const Mat Q = random_unitary(d, rng, real_only);
    Eigen::VectorXcd diag(d);
    for (int i = 0; i < d; ++i) diag(i) = U(rng);
    return Q * diag.asDiagonal() * Q.adjoint();
}

}  // namespace

Mat random_elliptic(int n, std::mt19937_64& rng, double skew, bool real_only) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const int d = n + 1;
    return positive_part(d, rng, real_only) + random_skew(d, rng, skew * U(rng), real_only);
}

Mat random_block_elliptic(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> U(1.0, 2.0), V(-0.5, 0.5);
    Mat A = Mat::Zero(n + 1, n + 1);
    A(0, 0) = cd(U(rng), V(rng));
    A.block(1, 1, n, n) = random_elliptic(n - 1, rng);
    return A;
}

Mat random_hermitian_elliptic(int n, std::mt19937_64& rng) { return positive_part(n + 1, rng, false); }

CoefficientMatrix random_rough(const Grid& g, std::mt19937_64& rng, bool real_only) {
    std::vector<Mat> v;
    v.reserve(g.points());
    std::uniform_real_distribution<double> U(0.0, 1.5);
    for (std::size_t i = 0; i < g.points(); ++i)
        v.push_back(positive_part(g.n + 1, rng, real_only) + random_skew(g.n + 1, rng, U(rng), real_only));
    return CoefficientMatrix::sampled(g, std::move(v));
}

CoefficientMatrix random_rough_cells(const Grid& g, int cells, std::uint64_t seed, bool real_only) {
    if (cells < 1 || g.Nx % cells != 0 || g.Nt % cells != 0)
        throw UsageError("random_rough_cells: grid sizes must be multiples of the cell count");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.5);
    std::size_t ncell = 1;
    for (int d = 0; d <= g.n; ++d) ncell *= static_cast<std::size_t>(cells);
    std::vector<Mat> cell;
    cell.reserve(ncell);
    for (std::size_t c = 0; c < ncell; ++c)
        cell.push_back(positive_part(g.n + 1, rng, real_only) + random_skew(g.n + 1, rng, U(rng), real_only));
    std::vector<Mat> v;
    v.reserve(g.points());
    for (std::size_t i = 0; i < g.points(); ++i) {
        const auto ix = g.spatial_index(i);
        std::size_t c = 0;
        for (int d = 0; d < g.n; ++d) c = c * cells + static_cast<std::size_t>(ix[d] * cells / g.Nx);
        c = c * cells + static_cast<std::size_t>(g.time_index(i) * cells / g.Nt);
        v.push_back(cell[c]);
    }
    return CoefficientMatrix::sampled(g, std::move(v));
}

}  // namespace pdir::dirac
