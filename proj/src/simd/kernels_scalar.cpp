#include "simd/kernels.hpp"

namespace pdir::simd {
namespace {

void cmul(cd* data, const cd* mult, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double a = data[i].real(), b = data[i].imag();
        const double c = mult[i].real(), d = mult[i].imag();
        data[i] = {a * c - b * d, a * d + b * c};
    }
}

void cmul_real(cd* data, const double* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) data[i] = {data[i].real() * w[i], data[i].imag() * w[i]};
}

cd dot_real(const cd* v, const double* w, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += w[i] * v[i].real();
        im += w[i] * v[i].imag();
    }
    return {re, im};
}

void abs2_acc(double* acc, const cd* v, std::size_t n, double scale) {
    for (std::size_t i = 0; i < n; ++i)
        acc[i] += scale * (v[i].real() * v[i].real() + v[i].imag() * v[i].imag());
}

const KernelTable table{"scalar", cmul, cmul_real, dot_real, abs2_acc};

}  // namespace

const KernelTable& scalar_kernels() { return table; }

}  // namespace pdir::simd
