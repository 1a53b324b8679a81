#include "fractime/kernels.hpp"

#include <gsl/gsl_sf_zeta.h>

#include <cmath>

#include "simd/kernels.hpp"
#include "spectral/errors.hpp"

namespace pdir::fractime {

namespace {
const double kC = 1.0 / (2.0 * std::sqrt(2.0 * M_PI));
}

std::vector<double> fd_weights(std::span<const double> x, double x0, int m) {
    const int n = static_cast<int>(x.size()) - 1;
    if (m < 0 || m > n) throw UsageError("fd_weights: derivative order exceeds stencil");
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1), std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
    double c1 = 1.0, c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            c2 *= c3;
            auto& ci = c[static_cast<std::size_t>(i)];
            auto& cj = c[static_cast<std::size_t>(j)];
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    ci[static_cast<std::size_t>(k)] = c1 * (k * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] -
                                                           c5 * c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)]) / c2;
                ci[0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                cj[static_cast<std::size_t>(k)] = (c4 * cj[static_cast<std::size_t>(k)] - k * cj[static_cast<std::size_t>(k - 1)]) / c3;
            cj[0] = c4 * cj[0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)];
    return w;
}

std::vector<cd> centered_derivative(std::span<const cd> v, double h, int m, int half) {
    std::vector<double> offs;
    for (int k = -half; k <= half; ++k) offs.push_back(k);
    const auto w = fd_weights(offs, 0.0, m);
    const double scale = std::pow(h, -m);
    const long N = static_cast<long>(v.size());
    std::vector<cd> out(v.size());
    for (long i = 0; i < N; ++i) {
        cd acc = 0.0;
        for (int k = -half; k <= half; ++k) {
            const long j = i + k;
            if (j >= 0 && j < N) acc += w[static_cast<std::size_t>(k + half)] * v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc * scale;
    }
    return out;
}

std::vector<cd> half_derivative_kernel_apply(std::span<const cd> v, double h, HalfVariant variant) {
    const std::size_t N = v.size();
    if (N < 8) throw UsageError("half_derivative_kernel_apply: fewer than 8 samples");
    if (!(h > 0.0)) throw UsageError("half_derivative_kernel_apply: spacing must be positive");
    const bool hil = variant == HalfVariant::hilbert;

    // Toeplitz weights centred at N-1: sum_j wc[j - i + N - 1] v_j is the punctured sum.
    std::vector<double> wc(2 * N - 1, 0.0);
    for (std::size_t d = 1; d < N; ++d) {
        const double w = std::pow(static_cast<double>(d), -1.5);
        wc[N - 1 + d] = hil ? -w : w;  // j > i has sgn(t-s) = -1
        wc[N - 1 - d] = w;
    }
    const auto& K = simd::kernels();
    const double pref = kC * std::pow(h, -0.5);

    std::vector<cd> d1, d2, d3, d4, d5;
    if (hil) {
        d1 = centered_derivative(v, h, 1, 5);
        d3 = centered_derivative(v, h, 3, 5);
        d5 = centered_derivative(v, h, 5, 5);
    } else {
        d2 = centered_derivative(v, h, 2, 5);
        d4 = centered_derivative(v, h, 4, 5);
    }
    const double zm12 = gsl_sf_zeta(-0.5), zm52 = gsl_sf_zeta(-2.5), zp12 = gsl_sf_zeta(0.5),
                 zm32 = gsl_sf_zeta(-1.5), zm72 = gsl_sf_zeta(-3.5), zeta32 = gsl_sf_zeta(1.5);

    std::vector<cd> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        // The window weights plus the zero-extension tails sum to the full lattice
        // sum: 2 zeta(3/2) for the even kernel, 0 for the odd one.
        const cd conv = K.dot_real(v.data(), wc.data() + (N - 1 - i), N);
        cd acc = pref * ((hil ? 0.0 : 2.0 * zeta32) * v[i] - conv);
        if (hil) {
            acc += -2.0 * kC * zp12 * d1[i] * std::pow(h, 0.5) - zm32 * (kC * d3[i] / 3.0) * std::pow(h, 2.5) -
                   zm72 * (kC * d5[i] / 60.0) * std::pow(h, 4.5);
        } else {
            acc += kC * zm12 * d2[i] * std::pow(h, 1.5) + (kC / 12.0) * zm52 * d4[i] * std::pow(h, 3.5);
        }
        out[i] = acc;
    }
    return out;
}

}  // namespace pdir::fractime
