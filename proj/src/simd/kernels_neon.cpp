#include <arm_neon.h>

#include "simd/kernels.hpp"

namespace pdir::simd {
namespace {

void cmul(cd* data, const cd* mult, std::size_t n) {
    auto* d = reinterpret_cast<double*>(data);
    const auto* m = reinterpret_cast<const double*>(mult);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t a = vld1q_f64(d + 2 * i);
        const float64x2_t b = vld1q_f64(m + 2 * i);
        const float64x2_t b_re = vdupq_laneq_f64(b, 0);
        const float64x2_t b_im = vdupq_laneq_f64(b, 1);
        const float64x2_t a_sw = vextq_f64(a, a, 1);
        const float64x2_t sign = {-1.0, 1.0};
        vst1q_f64(d + 2 * i, vfmaq_f64(vmulq_f64(a, b_re), vmulq_f64(a_sw, sign), b_im));
    }
}

void cmul_real(cd* data, const double* w, std::size_t n) {
    auto* d = reinterpret_cast<double*>(data);
    for (std::size_t i = 0; i < n; ++i) vst1q_f64(d + 2 * i, vmulq_n_f64(vld1q_f64(d + 2 * i), w[i]));
}

cd dot_real(const cd* v, const double* w, std::size_t n) {
    const auto* d = reinterpret_cast<const double*>(v);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) acc = vfmaq_n_f64(acc, vld1q_f64(d + 2 * i), w[i]);
    return {vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
}

void abs2_acc(double* acc, const cd* v, std::size_t n, double scale) {
    const auto* d = reinterpret_cast<const double*>(v);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t p = vld1q_f64(d + 2 * i);
        acc[i] += scale * vaddvq_f64(vmulq_f64(p, p));
    }
}

const KernelTable table{"neon", cmul, cmul_real, dot_real, abs2_acc};

}  // namespace

const KernelTable* neon_kernels_compiled() { return &table; }

}  // namespace pdir::simd
