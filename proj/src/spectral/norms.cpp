#include "spectral/norms.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir {

double parabolic_sobolev_norm(const ScalarField& field, double s, int sign) {
    if (s < -1.0 || s > 1.0) throw UsageError("parabolic_sobolev_norm: s must lie in [-1,1]");
    const ScalarField spec = to_spectral(field);
    const Grid& g = spec.grid();
    double acc = 0.0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency f = g.frequency(i);
        if (f.is_zero()) {
            if (s == 0.0) acc += std::norm(spec[i]);
            continue;
        }
        acc += std::norm(std::pow(cd(f.xi_norm2(), sign * f.tau), s) * spec[i]);
    }
    return std::sqrt(g.cell_volume() * acc);
}

double energy_norm(const ScalarProfile& u) {
    if (u.size() < 2) throw UsageError("energy_norm: fewer than 2 lambda nodes");
    u.validate(2);
    const ScalarProfile du = lambda_derivative(u);
    const auto w = trapezoid_weights(u.nodes);
    const Grid& g = u.fields.front().grid();
    double total = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const ScalarField spec = to_spectral(u.fields[j]);
        double slice = du.fields[j].norm() * du.fields[j].norm();
        for (int d = 0; d < g.n; ++d) {
            const double v = apply_symbol(symbols::gradient(d), spec).norm();
            slice += v * v;
        }
        const double h = apply_symbol(symbols::hilbert_half_derivative(), spec).norm();
        slice += h * h;
        total += w[j] * slice;
    }
    return std::sqrt(total);
}

}  // namespace pdir
