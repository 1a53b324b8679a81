#include "fractime/riesz.hpp"

#include <gsl/gsl_sf_zeta.h>

#include <cmath>

#include "fractime/kernels.hpp"
#include "simd/kernels.hpp"
#include "spectral/errors.hpp"

namespace pdir::fractime {

namespace {

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * M_PI);

// int_{|s|>1} k(s) g(s) ds for piecewise-linear interpolation of k*g, exact on partial cells
cd tail_integral(std::span<const cd> g, double dt, double t0, bool odd) {
    auto F = [&](std::size_t j) {
        const double s = t0 + dt * static_cast<double>(j);
        if (std::abs(s) < 1.0) return cd(0.0);
        const double w = 1.0 / std::sqrt(std::abs(s));
        return g[j] * (odd ? (s < 0 ? w : -w) : w);  // sgn(-s)
    };
    cd acc = 0.0;
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
        const double a = t0 + dt * static_cast<double>(j), b = a + dt;
        const double lo = std::max(a, 1.0), hi_neg = std::min(b, -1.0);
        if (a >= 1.0 || b <= -1.0) {
            acc += 0.5 * dt * (F(j) + F(j + 1));
            continue;
        }
        // cell straddles s = 1 or s = -1; integrate the linear interpolant of k*g over the outside part
        auto kg = [&](double s) {
            const double u = (s - a) / dt;
            const cd gs = (1.0 - u) * g[j] + u * g[j + 1];
            const double w = 1.0 / std::sqrt(std::abs(s));
            return gs * (odd ? (s < 0 ? w : -w) : w);
        };
        if (b > 1.0 && lo < b) acc += 0.5 * (b - lo) * (kg(lo) + kg(b));
        if (a < -1.0 && a < hi_neg) acc += 0.5 * (hi_neg - a) * (kg(a) + kg(hi_neg));
    }
    return acc;
}

}  // namespace

cd riesz_tail_constant(std::span<const cd> g, double dt, double t0, HalfVariant variant) {
    const bool odd = variant == HalfVariant::hilbert;
    const cd c = kInvSqrt2Pi * tail_integral(g, dt, t0, odd);
    return odd ? -c : c;
}

std::vector<cd> riesz_half_potential(std::span<const cd> g, double h, double t0, HalfVariant variant) {
    const std::size_t N = g.size();
    if (N < 8 || !(h > 0.0)) throw UsageError("riesz_half_potential: need >= 8 samples and dt > 0");
    const bool odd = variant == HalfVariant::hilbert;
    std::vector<double> wc(2 * N - 1, 0.0);
    for (std::size_t d = 1; d < N; ++d) {
        const double w = std::pow(static_cast<double>(d), -0.5);
        wc[N - 1 - d] = w;              // j < i
        wc[N - 1 + d] = odd ? -w : w;   // j > i
    }
    const auto& K = simd::kernels();
    const double sh = std::sqrt(h);
    std::vector<cd> d1, d2, d3;
    if (odd) {
        d1 = centered_derivative(g, h, 1, 5);
        d3 = centered_derivative(g, h, 3, 5);
    } else {
        d2 = centered_derivative(g, h, 2, 5);
    }
    const double zp12 = gsl_sf_zeta(0.5), zm32 = gsl_sf_zeta(-1.5), zm12 = gsl_sf_zeta(-0.5), zm52 = gsl_sf_zeta(-2.5);
    const cd tail = tail_integral(g, h, t0, odd);
    std::vector<cd> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        cd acc = sh * K.dot_real(g.data(), wc.data() + (N - 1 - i), N);
        if (odd) {
            // near s = t: sgn(u)|u|^{-1/2} g(t-u), even part -g' |u|^{1/2} - g'''/6 |u|^{5/2}
            acc += 2.0 * zm12 * d1[i] * std::pow(h, 1.5) + zm52 * (d3[i] / 3.0) * std::pow(h, 3.5);
            out[i] = -kInvSqrt2Pi * (acc - tail);
        } else {
            acc += -2.0 * zp12 * g[i] * sh - zm32 * d2[i] * std::pow(h, 2.5);
            out[i] = kInvSqrt2Pi * (acc - tail);
        }
    }
    return out;
}

std::vector<cd> riesz_half_spectral(std::span<const cd> g, double dt, HalfVariant variant, int pad) {
    if (variant == HalfVariant::plain)
        return line_multiplier(g, dt, [](double tau) { return tau == 0.0 ? cd(0.0) : cd(1.0 / std::sqrt(std::abs(tau))); }, pad);
    return line_multiplier(
        g, dt,
        [](double tau) { return tau == 0.0 ? cd(0.0) : cd(0.0, (tau > 0) - (tau < 0)) / std::sqrt(std::abs(tau)); }, pad);
}

}  // namespace pdir::fractime
