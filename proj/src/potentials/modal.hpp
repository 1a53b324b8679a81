#pragma once
#include <array>
#include <functional>
#include <vector>

#include "dirac/projectors.hpp"
#include "spectral/profile.hpp"

namespace pdir::potentials {

using dirac::Mat;
using dirac::Vec;

// Frequency at arbitrary real (xi, tau), not necessarily on a lattice.
Frequency make_frequency(const std::array<double, kMaxSpatialDim>& xi, double tau);

enum class Equation { forward, backward };

// Boundary traces of the layer multipliers at one frequency.
struct LayerTraces {
    cd S0{0.0}, D0_plus{0.0}, D0_minus{0.0};
    cd dnS0_plus{0.0}, dnS0_minus{0.0}, dnD0{0.0};
    cd K{0.0};
};

// Functional calculus at one nonzero frequency. The forward equation uses
// p and m; the backward equation uses p^* and N m^* N.
class ModeOperator {
public:
    ModeOperator(const Frequency& f, const Mat& m, int n, Equation eq = Equation::forward);

    const Frequency& frequency() const { return f_; }
    int n() const { return n_; }
    bool zero_mode() const { return zero_; }
    const Mat& p() const { return p_; }
    const Mat& pm() const { return pm_; }
    const Mat& mp() const { return mp_; }
    const Mat& chi_plus() const { return chi_plus_; }
    const Mat& chi_minus() const { return chi_minus_; }
    // inverse of p on its range: p / z with p^2 = z pi_ran
    const Mat& p_inverse() const { return pinv_; }

    // e^{-lambda pm} chi^{sgn lambda}(pm); lambda != 0
    Mat cauchy(double lambda) const;
    Mat cauchy_mp(double lambda) const;

    // scalar multipliers of S_lambda and D_lambda, lambda != 0
    cd single_layer(double lambda) const;
    cd double_layer(double lambda) const;
    // d/dlambda of the layer multipliers
    cd single_layer_derivative(double lambda) const;
    cd double_layer_derivative(double lambda) const;
    // conormal differentials D_A S_lambda f and D_A D_lambda f per unit f
    Vec single_layer_conormal(double lambda) const;
    Vec double_layer_conormal(double lambda) const;
    LayerTraces traces() const;

    // boundary value u|_0 recovered from the conormal datum, u = -(p^{-1} h)_perp
    cd boundary_value(const Vec& h) const;

private:
    Frequency f_;
    int n_;
    bool zero_ = false;
    Mat p_, m_, pm_, mp_, pinv_;
    Mat chi_plus_, chi_minus_, chi_plus_mp_, chi_minus_mp_, pi_p_, pi_mp_;
    std::string where_;
};

// Conormal differential of u = c e^{i(x xi + t tau)} with lambda-derivative du:
// (A00 du + i A0par.xi u, i xi u, theta u) with theta = i sgn(tau)|tau|^{1/2} (forward)
// or |tau|^{1/2} (backward, where A should be the adjoint coefficients).
Vec conormal_of(const Mat& A, const Frequency& f, cd u, cd du, Equation eq = Equation::forward);

// T restricted to ran(p) in the basis {e_perp, e_r} (nonzero frequency)
Eigen::Matrix2cd range_coordinates(const Mat& T, const Frequency& f, int n);
// chi^+(pm) and chi^-(pm) in the same basis, assembled from the boundary layer traces
Eigen::Matrix2cd chi_plus_from_layers(const ModeOperator& op);
Eigen::Matrix2cd chi_minus_from_layers(const ModeOperator& op);

// Applies a per-frequency map to the spectral coefficients of a field.
ScalarField map_modes(const ScalarField& f, const std::function<cd(std::size_t, cd)>& op);
ConormalField map_modes(const ConormalField& h, const std::function<Vec(std::size_t, const Vec&)>& op);

// Per-node relative L^2 error of a against b after discarding the (0,0) mode
// (profiles compared modulo constants). Returns the maximum over nodes.
double max_relative_error_mod_constant(const ScalarProfile& a, const ScalarProfile& b);

}  // namespace pdir::potentials
