#pragma once
#include <complex>
#include <cstddef>

// Elementwise kernels used by the multiplier, quadrature and box-average loops.
// Every variant must agree with the scalar reference up to rounding.
namespace pdir::simd {

using cd = std::complex<double>;

struct KernelTable {
    const char* name;
    // data[i] *= mult[i]
    void (*cmul)(cd* data, const cd* mult, std::size_t n);
    // data[i] *= w[i]
    void (*cmul_real)(cd* data, const double* w, std::size_t n);
    // sum_i w[i] * v[i]
    cd (*dot_real)(const cd* v, const double* w, std::size_t n);
    // acc[i] += scale * |v[i]|^2
    void (*abs2_acc)(double* acc, const cd* v, std::size_t n, double scale);
};

const KernelTable& scalar_kernels();
// nullptr when the variant was not compiled in or the CPU lacks the feature
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// Best variant for this CPU. PDIR_SIMD=scalar in the environment forces the reference.
const KernelTable& kernels();

}  // namespace pdir::simd
