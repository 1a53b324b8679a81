#include "dirac/symbol_family.hpp"

#include <cmath>

#include "spectral/errors.hpp"

namespace pdir::dirac {

Mat dirac_symbol(const Frequency& f, int n) {
    const int d = n + 2;
    Mat p = Mat::Zero(d, d);
    const double a = std::sqrt(std::abs(f.tau));
    for (int j = 0; j < n; ++j) {
        p(0, 1 + j) = cd(0.0, f.xi[static_cast<std::size_t>(j)]);
        p(1 + j, 0) = cd(0.0, -f.xi[static_cast<std::size_t>(j)]);
    }
    p(0, d - 1) = -a;
    p(d - 1, 0) = cd(0.0, -f.sgn_tau() * a);
    return p;
}

Mat dirac_symbol_adjoint(const Frequency& f, int n) { return dirac_symbol(f, n).adjoint(); }

Mat coefficient_multiplier(const Mat& A) {
    const Eigen::Index d = A.rows() + 1;
    Mat m = Mat::Zero(d, d);
    m.block(0, 0, A.rows(), A.cols()) = hat_transform(A);
    m(d - 1, d - 1) = 1.0;
    return m;
}

Mat coefficient_multiplier(const CoefficientMatrix& A) { return coefficient_multiplier(A.value()); }

Mat reflection(int n) {
    Mat N = Mat::Identity(n + 2, n + 2);
    N(0, 0) = -1.0;
    return N;
}

Mat backward_multiplier(const Mat& m) {
    const Mat N = reflection(static_cast<int>(m.rows()) - 2);
    return N * m.adjoint() * N;
}

Mat adjoint_anticommutator(const Frequency& f, int n) {
    const int d = n + 2;
    Mat r = Mat::Zero(d, d);
    const double a = std::sqrt(std::abs(f.tau));
    const double s = f.sgn_tau();
    r(0, d - 1) = cd(1.0, s) * a;
    r(d - 1, 0) = cd(1.0, -s) * a;
    return r;
}

Vec e_perp(int n) {
    Vec e = Vec::Zero(n + 2);
    e(0) = 1.0;
    return e;
}

Vec e_r(const Frequency& f, int n) {
    Vec e = Vec::Zero(n + 2);
    const double norm = std::sqrt(f.xi_norm2() + std::abs(f.tau));
    if (norm == 0.0) throw DomainError("e_r: undefined at the zero frequency");
    for (int j = 0; j < n; ++j) e(1 + j) = f.xi[static_cast<std::size_t>(j)] / norm;
    e(n + 1) = f.sgn_tau() * std::sqrt(std::abs(f.tau)) / norm;
    return e;
}

cd d_r(const Frequency& f) { return cd(0.0, std::sqrt(f.xi_norm2() + std::abs(f.tau))); }

DiracSymbolFamily::DiracSymbolFamily(const Grid& g)
    : grid_(g), A_(identity_coefficients(g.n)), m_(Mat::Identity(g.n + 2, g.n + 2)) {
    grid_.validate();
}

DiracSymbolFamily::DiracSymbolFamily(const Grid& g, const CoefficientMatrix& A) : grid_(g) {
    grid_.validate();
    if (!A.is_constant()) throw UsageError("DiracSymbolFamily: spectral path needs constant coefficients");
    if (A.n() != g.n) throw UsageError("DiracSymbolFamily: coefficient dimension does not match the grid");
    A_ = A.value();
    m_ = coefficient_multiplier(A_);
}

ModeSymbols DiracSymbolFamily::mode(const Frequency& f) const {
    ModeSymbols s{f, dirac_symbol(f, grid_.n), {}, {}};
    s.pm = s.p * m_;
    s.mp = m_ * s.p;
    return s;
}

ModeSymbols DiracSymbolFamily::mode(std::size_t flat) const { return mode(grid_.frequency(flat)); }

}  // namespace pdir::dirac
