#include "energy/solver.hpp"

#include <unsupported/Eigen/IterativeSolvers>

#include <cmath>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::energy {
class SlabOperator;
}

namespace Eigen::internal {
template <>
struct traits<pdir::energy::SlabOperator> : public traits<Eigen::SparseMatrix<std::complex<double>>> {};
}  // namespace Eigen::internal

namespace pdir::energy {

// The discrete operator restricted to the free nodes (first .. Nlambda-1).
class SlabOperator : public Eigen::EigenBase<SlabOperator> {
public:
    using Scalar = std::complex<double>;
    using RealScalar = double;
    using StorageIndex = int;
    enum { ColsAtCompileTime = Eigen::Dynamic, MaxColsAtCompileTime = Eigen::Dynamic, IsRowMajor = false };

    SlabOperator(const DeltaForm& form, int first) : form_(form), first_(first) {
        offset_ = static_cast<Eigen::Index>(first) * static_cast<Eigen::Index>(form.slab().base.points());
        size_ = static_cast<Eigen::Index>(form.slab().dof()) - offset_;
    }
    Eigen::Index rows() const { return size_; }
    Eigen::Index cols() const { return size_; }

    CVec apply(const CVec& x) const {
        CVec full = CVec::Zero(size_ + offset_);
        full.tail(size_) = x;
        return form_.apply(full).tail(size_);
    }

    template <typename Rhs>
    Eigen::Product<SlabOperator, Rhs, Eigen::AliasFreeProduct> operator*(const Eigen::MatrixBase<Rhs>& x) const {
        return Eigen::Product<SlabOperator, Rhs, Eigen::AliasFreeProduct>(*this, x.derived());
    }

    const DeltaForm& form() const { return form_; }
    int first() const { return first_; }

private:
    const DeltaForm& form_;
    int first_;
    Eigen::Index offset_ = 0, size_ = 0;
};

}  // namespace pdir::energy

namespace Eigen::internal {
template <typename Rhs>
struct generic_product_impl<pdir::energy::SlabOperator, Rhs, SparseShape, DenseShape, GemvProduct>
    : generic_product_impl_base<pdir::energy::SlabOperator, Rhs,
                                generic_product_impl<pdir::energy::SlabOperator, Rhs>> {
    using Scalar = typename Product<pdir::energy::SlabOperator, Rhs>::Scalar;
    template <typename Dest>
    static void scaleAndAddTo(Dest& dst, const pdir::energy::SlabOperator& lhs, const Rhs& rhs, const Scalar& alpha) {
        dst.noalias() += alpha * lhs.apply(rhs);
    }
};
}  // namespace Eigen::internal

namespace pdir::energy {

namespace {

// Exact inverse of the operator for the averaged constant coefficients: per
// (x,t) mode the system is tridiagonal in lambda.
class ModePreconditioner {
public:
    ModePreconditioner() = default;
    template <typename M>
    ModePreconditioner& analyzePattern(const M&) { return *this; }
    template <typename M>
    ModePreconditioner& factorize(const M&) { return *this; }
    template <typename M>
    ModePreconditioner& compute(const M& op) {
        setup(op.form(), op.first());
        return *this;
    }
    Eigen::ComputationInfo info() const { return Eigen::Success; }

    template <typename Rhs>
    CVec solve(const Rhs& b) const {
        const std::size_t P = grid_.points();
        const int K = static_cast<int>(b.size() / static_cast<Eigen::Index>(P));
        std::vector<ScalarField> rows;
        rows.reserve(static_cast<std::size_t>(K));
        for (int j = 0; j < K; ++j) {
            ScalarField r(grid_);
            for (std::size_t i = 0; i < P; ++i) r[i] = b(static_cast<Eigen::Index>(j * P + i));
            rows.push_back(to_spectral(r));
        }
        std::vector<cd> c(static_cast<std::size_t>(K)), d(static_cast<std::size_t>(K));
        for (std::size_t i = 0; i < P; ++i) {
            const auto& L = lo_[i];
            const auto& D = di_[i];
            const auto& U = up_[i];
            // Thomas algorithm
            c[0] = U[0] / D[0];
            d[0] = rows[0][i] / D[0];
            for (int j = 1; j < K; ++j) {
                const cd m = D[static_cast<std::size_t>(j)] - L[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j - 1)];
                c[static_cast<std::size_t>(j)] = U[static_cast<std::size_t>(j)] / m;
                d[static_cast<std::size_t>(j)] =
                    (rows[static_cast<std::size_t>(j)][i] - L[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j - 1)]) / m;
            }
            for (int j = K - 2; j >= 0; --j) d[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(j + 1)];
            for (int j = 0; j < K; ++j) rows[static_cast<std::size_t>(j)][i] = d[static_cast<std::size_t>(j)];
        }
        CVec x(b.size());
        for (int j = 0; j < K; ++j) {
            const ScalarField r = to_physical(rows[static_cast<std::size_t>(j)]);
            for (std::size_t i = 0; i < P; ++i) x(static_cast<Eigen::Index>(j * P + i)) = r[i];
        }
        return x;
    }

private:
    void setup(const DeltaForm& form, int first) {
        const DiscreteSlab& s = form.slab();
        grid_ = s.base;
        const int J = s.Nlambda, K = J - first;
        const double h = s.h(), vol = grid_.cell_volume();
        const dirac::Mat& A = form.averaged_A();
        const int n = grid_.n;
        const double gp[2] = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
        const std::size_t P = grid_.points();
        lo_.assign(P, std::vector<cd>(static_cast<std::size_t>(K), 0.0));
        di_ = up_ = lo_;
        for (std::size_t i = 0; i < P; ++i) {
            const Frequency q = grid_.frequency(i);
            const cd shift(1.0, -form.delta() * q.sgn_tau());
            // element matrix E(k, l): test basis k, trial basis l
            cd E[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
            for (double sq : gp) {
                const double phi[2] = {1.0 - sq, sq}, dphi[2] = {-1.0 / h, 1.0 / h};
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        dirac::Vec gu(n + 1), gv(n + 1);
                        gu(0) = dphi[l];
                        gv(0) = dphi[k];
                        for (int a = 0; a < n; ++a) {
                            gu(1 + a) = cd(0.0, q.xi[static_cast<std::size_t>(a)]) * phi[l];
                            gv(1 + a) = cd(0.0, q.xi[static_cast<std::size_t>(a)]) * phi[k];
                        }
                        const cd val = gv.dot(A * gu) + cd(0.0, q.tau) * phi[l] * phi[k];
                        E[k][l] += 0.5 * h * val;
                    }
            }
            for (int e = 0; e < J; ++e) {
                const int nodes[2] = {e - first, e + 1 - first};
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l) {
                        const int r = nodes[k], c = nodes[l];
                        if (r < 0 || c < 0 || r >= K || c >= K) continue;
                        const cd v = vol * shift * E[k][l];
                        if (r == c) di_[i][static_cast<std::size_t>(r)] += v;
                        else if (c == r + 1) up_[i][static_cast<std::size_t>(r)] += v;
                        else lo_[i][static_cast<std::size_t>(r)] += v;
                    }
            }
        }
    }

    Grid grid_{};
    std::vector<std::vector<cd>> lo_, di_, up_;
};

CVec dense_solve(const SlabOperator& op, const CVec& b) {
    const Eigen::Index N = op.rows();
    Eigen::MatrixXcd M(N, N);
    CVec e = CVec::Zero(N);
    for (Eigen::Index j = 0; j < N; ++j) {
        e(j) = 1.0;
        M.col(j) = op.apply(e);
        e(j) = 0.0;
    }
    return M.partialPivLu().solve(b);
}

ScalarField node_field(const CVec& v, const Grid& g, int node) {
    ScalarField f(g);
    const std::size_t P = g.points();
    for (std::size_t i = 0; i < P; ++i) f[i] = v(static_cast<Eigen::Index>(node * P + i));
    return f;
}

ScalarField shift(const ScalarField& f, double delta, double sign) {
    const ParabolicSymbol sym{"1+dH", [=](const Frequency& q) { return cd(1.0, sign * delta * q.sgn_tau()); }, 1.0};
    return apply_symbol(sym, f);
}

}  // namespace

SlabSolution solve_energy_bvp(const DeltaForm& form, BoundaryKind kind, const ScalarField& f, const SolveOptions& opt) {
    const DiscreteSlab& s = form.slab();
    const dirac::CoefficientMatrix& A = form.A();
    if (!(A.kappa() - A.Cbound() * form.delta() > 0.0))
        throw UsageError("solve_energy_bvp: delta too large, kappa - C delta must be positive");
    if (!(f.grid() == s.base)) throw UsageError("solve_energy_bvp: boundary data on another grid");
    const ScalarField fp = to_physical(f);
    const std::size_t P = s.base.points();
    const int first = kind == BoundaryKind::neumann ? 0 : 1;
    SlabOperator op(form, first);

    CVec b;
    CVec lift = CVec::Zero(static_cast<Eigen::Index>(s.dof()));
    if (kind == BoundaryKind::neumann) {
        b = CVec::Zero(op.rows());
        const ScalarField g = cd(-s.base.cell_volume()) * shift(fp, form.delta(), -1.0);
        for (std::size_t i = 0; i < P; ++i) b(static_cast<Eigen::Index>(i)) = g[i];
    } else {
        for (std::size_t i = 0; i < P; ++i) lift(static_cast<Eigen::Index>(i)) = fp[i];
        b = -form.apply(lift).tail(op.rows());
    }

    SlabSolution sol;
    CVec x = CVec::Zero(op.rows());
    const double bn = b.norm();
    if (bn > 0.0) {
        Eigen::GMRES<SlabOperator, ModePreconditioner> gmres;
        gmres.set_restart(opt.restart);
        gmres.setTolerance(opt.tol);
        gmres.setMaxIterations(static_cast<Eigen::Index>(opt.max_iterations ? opt.max_iterations : 10 * s.dof()));
        gmres.compute(op);
        x = gmres.solve(b);
        sol.iterations = static_cast<std::size_t>(gmres.iterations());
        double res = (op.apply(x) - b).norm() / bn;
        if (gmres.info() != Eigen::Success || res > 100 * opt.tol) {
            if (!opt.dense_fallback || s.dof() > opt.dense_limit)
                throw SolverError("solve_energy_bvp: GMRES did not converge, residual " + std::to_string(res), res);
            x = dense_solve(op, b);
            sol.used_dense = true;
        }
    }
    sol.residual = bn > 0.0 ? (op.apply(x) - b).norm() / bn : 0.0;
    CVec full = lift;
    full.tail(op.rows()) += x;
    sol.u = SlabFunction::from_vector(s, full);
    return sol;
}

ScalarField discrete_conormal(const DeltaForm& form, const SlabFunction& u) {
    const DiscreteSlab& s = form.slab();
    const CVec r = form.apply(u.to_vector());
    const ScalarField r0 = node_field(r, s.base, 0);
    // r0 = -vol (1 - delta H) g
    const ParabolicSymbol inv{"1/(1-dH)", [&](const Frequency& q) { return 1.0 / cd(1.0, -form.delta() * q.sgn_tau()); }, 1.0};
    return cd(-1.0 / s.base.cell_volume()) * apply_symbol(inv, r0);
}

}  // namespace pdir::energy
