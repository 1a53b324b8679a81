#pragma once
#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "spectral/grid.hpp"

namespace pdir::dirac {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class Structure { block, upper_triangular, lower_triangular, hermitian, constant, general };

// Complex (n+1)x(n+1) coefficients, index 0 is the normal (lambda) direction.
// Either constant or sampled at every point of an (x,t) grid.
class CoefficientMatrix {
public:
    static CoefficientMatrix constant(const Mat& A);
    static CoefficientMatrix sampled(const Grid& g, std::vector<Mat> values);

    int n() const { return n_; }
    bool is_constant() const { return samples_.size() == 1; }
    // throws UsageError for sampled coefficients
    const Mat& value() const;
    const Mat& at(std::size_t point) const { return samples_[is_constant() ? 0 : point]; }
    std::size_t sample_count() const { return samples_.size(); }
    const Grid& grid() const { return grid_; }

    double kappa() const { return kappa_; }
    double Cbound() const { return C_; }
    // entrywise check of a structural tag, tolerance relative to Cbound
    bool has(Structure s, double tol = 1e-14) const;

private:
    CoefficientMatrix() = default;
    void measure();
    int n_ = 0;
    Grid grid_{};
    std::vector<Mat> samples_;
    double kappa_ = 0.0;
    double C_ = 0.0;
};

// min eigenvalue of the Hermitian part, largest singular value
double ellipticity_lower(const Mat& A);
double ellipticity_upper(const Mat& A);

// Block transform with A_perp,perp scalar. Self-inverse.
Mat hat_transform(const Mat& A);
CoefficientMatrix hat_transform(const CoefficientMatrix& A);

Mat identity_coefficients(int n);
// Hermitian part with spectrum in [1, 2] plus a skew part of norm <= skew; complex unless real_only.
Mat random_elliptic(int n, std::mt19937_64& rng, double skew = 1.0, bool real_only = false);
Mat random_block_elliptic(int n, std::mt19937_64& rng);
Mat random_hermitian_elliptic(int n, std::mt19937_64& rng);
// Independent per-point samples with kappa >= 1 and C <= 4.
CoefficientMatrix random_rough(const Grid& g, std::mt19937_64& rng, bool real_only = false);
// Piecewise constant on a cells^(n+1) partition of the torus, drawn from a fixed seed, so
// grids whose sizes are multiples of `cells` sample the same coefficient function.
CoefficientMatrix random_rough_cells(const Grid& g, int cells, std::uint64_t seed, bool real_only = false);

}  // namespace pdir::dirac
