#include "dirac/matrix_function.hpp"

#include <cmath>
#include <numeric>

#include "spectral/errors.hpp"

namespace pdir::dirac {

namespace {
constexpr double kZeroTol = 1e-8;
constexpr double kClusterTol = 1e-6;
constexpr double kCondMax = 1e8;
constexpr double kSepMin = 1e-10;
}  // namespace

cd bracket(cd z) { return z.real() > 0 ? z : (z.real() < 0 ? -z : cd(0.0)); }

namespace funcs {
SectorFunction one() { return {"1", [](cd) { return cd(1.0); }, cd(1.0)}; }
SectorFunction identity() { return {"z", [](cd z) { return z; }, cd(0.0)}; }
SectorFunction range_indicator() { return {"1_ran", [](cd) { return cd(1.0); }, cd(0.0)}; }
SectorFunction chi_plus() { return {"chi+", [](cd z) { return cd(z.real() > 0 ? 1.0 : 0.0); }, cd(0.0)}; }
SectorFunction chi_minus() { return {"chi-", [](cd z) { return cd(z.real() < 0 ? 1.0 : 0.0); }, cd(0.0)}; }
SectorFunction sgn() {
    return {"sgn", [](cd z) { return cd(z.real() > 0 ? 1.0 : (z.real() < 0 ? -1.0 : 0.0)); }, cd(0.0)};
}
SectorFunction exp_bracket(double l) {
    return {"exp[-l[z]]", [l](cd z) { return std::exp(-l * bracket(z)); }, cd(1.0)};
}
SectorFunction exp_chi_plus(double l) {
    return {"exp[-lz]chi+", [l](cd z) { return z.real() > 0 ? std::exp(-l * z) : cd(0.0); }, cd(0.0)};
}
SectorFunction exp_chi_minus(double l) {
    return {"exp[lz]chi-", [l](cd z) { return z.real() < 0 ? std::exp(l * z) : cd(0.0); }, cd(0.0)};
}
SectorFunction bracket_power(double s) {
    return {"[z]^s", [s](cd z) { return std::pow(bracket(z), s); }, cd(0.0)};
}
}  // namespace funcs

std::string describe(const Frequency& f, int n) {
    std::string s = "frequency k=(";
    for (int d = 0; d < n; ++d) s += (d ? "," : "") + std::to_string(f.k[static_cast<std::size_t>(d)]);
    return s + "), m=" + std::to_string(f.m);
}

namespace {

double matrix_scale(const Mat& T) { return std::max(T.cwiseAbs().maxCoeff(), 1e-300); }

// Swap adjacent diagonal entries k, k+1 of the upper-triangular U, updating Q.
void swap_adjacent(Mat& U, Mat& Q, Eigen::Index k) {
    const cd a = U(k, k), b = U(k + 1, k + 1), c = U(k, k + 1);
    Eigen::Vector2cd x(c, b - a);
    const double nx = x.norm();
    if (nx == 0.0) return;
    x /= nx;
    Eigen::Matrix2cd G;
    G << x(0), -std::conj(x(1)), x(1), std::conj(x(0));
    const Eigen::Index d = U.rows();
    U.block(k, 0, 2, d) = G.adjoint() * U.block(k, 0, 2, d);
    U.block(0, k, d, 2) = U.block(0, k, d, 2) * G;
    Q.block(0, k, d, 2) = Q.block(0, k, d, 2) * G;
    U(k + 1, k) = 0.0;
}

struct Clusters {
    std::vector<int> id;  // cluster id per eigenvalue
    std::vector<bool> zero;
    int count = 0;
};

Clusters cluster(const std::vector<cd>& ev, double scale) {
    const std::size_t d = ev.size();
    Clusters c;
    c.id.assign(d, -1);
    for (std::size_t i = 0; i < d; ++i) {
        if (c.id[i] >= 0) continue;
        const int cid = c.count++;
        const bool z = std::abs(ev[i]) <= kZeroTol * scale;
        c.zero.push_back(z);
        std::vector<std::size_t> stack{i};
        c.id[i] = cid;
        while (!stack.empty()) {
            const std::size_t j = stack.back();
            stack.pop_back();
            for (std::size_t k = 0; k < d; ++k) {
                if (c.id[k] >= 0) continue;
                const bool kz = std::abs(ev[k]) <= kZeroTol * scale;
                if ((z && kz) || (!z && !kz && std::abs(ev[k] - ev[j]) <= kClusterTol * scale)) {
                    c.id[k] = cid;
                    stack.push_back(k);
                }
            }
        }
    }
    return c;
}

}  // namespace

Mat schur_parlett(const Mat& T, const SectorFunction& b, const std::string& where) {
    const Eigen::Index d = T.rows();
    const double scale = matrix_scale(T);
    Eigen::ComplexSchur<Mat> cs(T);
    Mat U = cs.matrixT();
    Mat Q = cs.matrixU();
    std::vector<cd> ev(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i) ev[static_cast<std::size_t>(i)] = U(i, i);
    const Clusters cl = cluster(ev, scale);

    // order diagonal by cluster id (bubble sort with adjacent swaps)
    std::vector<int> ids(cl.id);
    for (Eigen::Index pass = 0; pass < d; ++pass)
        for (Eigen::Index k = 0; k + 1 < d; ++k)
            if (ids[static_cast<std::size_t>(k)] > ids[static_cast<std::size_t>(k + 1)]) {
                swap_adjacent(U, Q, k);
                std::swap(ids[static_cast<std::size_t>(k)], ids[static_cast<std::size_t>(k + 1)]);
            }

    // block boundaries
    std::vector<Eigen::Index> start{0};
    for (Eigen::Index k = 1; k < d; ++k)
        if (ids[static_cast<std::size_t>(k)] != ids[static_cast<std::size_t>(k - 1)]) start.push_back(k);
    start.push_back(d);
    const std::size_t nb = start.size() - 1;

    Mat F = Mat::Zero(d, d);
    for (std::size_t bi = 0; bi < nb; ++bi) {
        const Eigen::Index s = start[bi], len = start[bi + 1] - s;
        const Mat Ub = U.block(s, s, len, len);
        const bool is_zero = cl.zero[static_cast<std::size_t>(ids[static_cast<std::size_t>(s)])];
        if (is_zero) {
            F.block(s, s, len, len) = b.at_zero * Mat::Identity(len, len);
        } else if (len == 1) {
            F(s, s) = b.f(Ub(0, 0));
        } else {
            // Cauchy integral on a circle around the cluster
            const cd centre = Ub.diagonal().mean();
            double spread = 0.0;
            for (Eigen::Index i = 0; i < len; ++i) spread = std::max(spread, std::abs(Ub(i, i) - centre));
            const double r = std::max(3.0 * spread, 1e-3 * std::abs(centre));
            const int M = 64;
            Mat acc = Mat::Zero(len, len);
            for (int j = 0; j < M; ++j) {
                const cd w = std::polar(1.0, 2.0 * M_PI * j / M);
                const cd z = centre + r * w;
                const Mat R = (z * Mat::Identity(len, len) - Ub).inverse();
                acc += b.f(z) * R * (r * w);
            }
            F.block(s, s, len, len) = acc / static_cast<double>(M);
        }
    }
    // off-diagonal blocks by the block Parlett recurrence
    for (std::size_t gap = 1; gap < nb; ++gap) {
        for (std::size_t bi = 0; bi + gap < nb; ++bi) {
            const std::size_t bj = bi + gap;
            const Eigen::Index si = start[bi], li = start[bi + 1] - si, sj = start[bj], lj = start[bj + 1] - sj;
            const Mat Uii = U.block(si, si, li, li), Ujj = U.block(sj, sj, lj, lj), Uij = U.block(si, sj, li, lj);
            Mat rhs = F.block(si, si, li, li) * Uij - Uij * F.block(sj, sj, lj, lj);
            for (std::size_t bk = bi + 1; bk < bj; ++bk) {
                const Eigen::Index sk = start[bk], lk = start[bk + 1] - sk;
                rhs += F.block(si, sk, li, lk) * U.block(sk, sj, lk, lj) - U.block(si, sk, li, lk) * F.block(sk, sj, lk, lj);
            }
            double sep = INFINITY;
            for (Eigen::Index a = 0; a < li; ++a)
                for (Eigen::Index c = 0; c < lj; ++c) sep = std::min(sep, std::abs(Uii(a, a) - Ujj(c, c)));
            if (sep <= kSepMin * scale)
                throw ConditioningError("matrix_function: clusters not separated at " + where);
            // Uii X - X Ujj = rhs, column-major vec: (I kron Uii - Ujj^T kron I) vec X
            Mat K = Mat::Zero(li * lj, li * lj);
            for (Eigen::Index c = 0; c < lj; ++c)
                for (Eigen::Index e = 0; e < lj; ++e) {
                    K.block(c * li, e * li, li, li) -= Ujj(e, c) * Mat::Identity(li, li);
                    if (c == e) K.block(c * li, e * li, li, li) += Uii;
                }
            Eigen::Map<const Vec> r(rhs.data(), li * lj);
            const Vec x = K.partialPivLu().solve(Vec(r));
            F.block(si, sj, li, lj) = Eigen::Map<const Mat>(x.data(), li, lj);
        }
    }
    const Mat out = Q * F * Q.adjoint();
    if (!out.allFinite()) throw ConditioningError("matrix_function: Schur-Parlett failed at " + where);
    return out;
}

MatrixFunctionResult matrix_function_ex(const Mat& T, const SectorFunction& b, const std::string& where) {
    const Eigen::Index d = T.rows();
    const double scale = matrix_scale(T);
    MatrixFunctionResult res;
    if (T.cwiseAbs().maxCoeff() == 0.0) {
        res.value = b.at_zero * Mat::Identity(d, d);
        return res;
    }
    Eigen::ComplexEigenSolver<Mat> es(T);
    if (es.info() != Eigen::Success) {
        res.value = schur_parlett(T, b, where);
        res.path = MatrixFunctionPath::schur_parlett;
        return res;
    }
    std::vector<Eigen::Index> nonzero;
    for (Eigen::Index i = 0; i < d; ++i)
        if (std::abs(es.eigenvalues()(i)) > kZeroTol * scale) nonzero.push_back(i);
    const Eigen::Index nz = d - static_cast<Eigen::Index>(nonzero.size());

    Mat V(d, d);
    Vec vals(d);
    for (std::size_t c = 0; c < nonzero.size(); ++c) {
        V.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(nonzero[c]);
        vals(static_cast<Eigen::Index>(c)) = b.f(es.eigenvalues()(nonzero[c]));
    }
    bool ok = true;
    if (nz > 0) {
        Eigen::JacobiSVD<Mat> svd(T, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        Eigen::Index null_dim = 0;
        for (Eigen::Index i = 0; i < d; ++i)
            if (sv(i) <= kZeroTol * scale) ++null_dim;
        if (null_dim != nz) {
            ok = false;
        } else {
            V.rightCols(nz) = svd.matrixV().rightCols(nz);
            vals.tail(nz).setConstant(b.at_zero);
        }
    }
    if (ok) {
        Eigen::JacobiSVD<Mat> sv(V);
        const double smin = sv.singularValues()(d - 1);
        res.eigvec_condition = smin > 0 ? sv.singularValues()(0) / smin : INFINITY;
        ok = res.eigvec_condition <= kCondMax;
    }
    if (!ok) {
        res.value = schur_parlett(T, b, where);
        res.path = MatrixFunctionPath::schur_parlett;
        return res;
    }
    res.value = V * vals.asDiagonal() * V.partialPivLu().inverse();
    return res;
}

Mat matrix_function(const Mat& T, const SectorFunction& b, const std::string& where) {
    return matrix_function_ex(T, b, where).value;
}

}  // namespace pdir::dirac
