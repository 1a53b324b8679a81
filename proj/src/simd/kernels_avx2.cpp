#include <immintrin.h>

#include "simd/kernels.hpp"

namespace pdir::simd {
namespace {

// complex<double> is laid out as (re, im); one __m256d holds two complex values.
void cmul(cd* data, const cd* mult, std::size_t n) {
    auto* d = reinterpret_cast<double*>(data);
    const auto* m = reinterpret_cast<const double*>(mult);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d a = _mm256_loadu_pd(d + 2 * i);
        const __m256d b = _mm256_loadu_pd(m + 2 * i);
        const __m256d b_re = _mm256_movedup_pd(b);
        const __m256d b_im = _mm256_permute_pd(b, 0xF);
        const __m256d a_sw = _mm256_permute_pd(a, 0x5);
        // (ar*br - ai*bi, ai*br + ar*bi)
        const __m256d r = _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
        _mm256_storeu_pd(d + 2 * i, r);
    }
    for (; i < n; ++i) {
        const double a = data[i].real(), b = data[i].imag();
        const double c = mult[i].real(), e = mult[i].imag();
        data[i] = {a * c - b * e, a * e + b * c};
    }
}

void cmul_real(cd* data, const double* w, std::size_t n) {
    auto* d = reinterpret_cast<double*>(data);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m128d w2 = _mm_loadu_pd(w + i);
        const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2), 0x50);
        _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), ww));
    }
    for (; i < n; ++i) data[i] = {data[i].real() * w[i], data[i].imag() * w[i]};
}

cd dot_real(const cd* v, const double* w, std::size_t n) {
    const auto* d = reinterpret_cast<const double*>(v);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d w4 = _mm256_loadu_pd(w + i);
        const __m256d wlo = _mm256_permute4x64_pd(w4, 0x50);
        const __m256d whi = _mm256_permute4x64_pd(w4, 0xFA);
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(d + 2 * i), wlo, acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(d + 2 * i + 4), whi, acc1);
    }
    const __m256d acc = _mm256_add_pd(acc0, acc1);
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double re = lanes[0] + lanes[2];
    double im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        re += w[i] * v[i].real();
        im += w[i] * v[i].imag();
    }
    return {re, im};
}

void abs2_acc(double* acc, const cd* v, std::size_t n, double scale) {
    const auto* d = reinterpret_cast<const double*>(v);
    const __m256d s = _mm256_set1_pd(scale);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d p = _mm256_loadu_pd(d + 2 * i);      // v0 v1
        const __m256d q = _mm256_loadu_pd(d + 2 * i + 4);  // v2 v3
        const __m256d pp = _mm256_mul_pd(p, p);
        const __m256d qq = _mm256_mul_pd(q, q);
        // horizontal pairs: (|v0|^2, |v2|^2, |v1|^2, |v3|^2)
        const __m256d h = _mm256_hadd_pd(pp, qq);
        const __m256d ordered = _mm256_permute4x64_pd(h, 0xD8);
        _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(s, ordered, _mm256_loadu_pd(acc + i)));
    }
    for (; i < n; ++i) acc[i] += scale * (v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
}

const KernelTable table{"avx2", cmul, cmul_real, dot_real, abs2_acc};

}  // namespace

const KernelTable* avx2_kernels_compiled() { return &table; }

}  // namespace pdir::simd
