#include <cstdlib>
#include <string_view>

#include "simd/kernels.hpp"

namespace pdir::simd {

#if defined(PDIR_HAVE_AVX2_TU)
const KernelTable* avx2_kernels_compiled();
#endif
#if defined(PDIR_HAVE_NEON_TU)
const KernelTable* neon_kernels_compiled();
#endif

const KernelTable* avx2_kernels() {
#if defined(PDIR_HAVE_AVX2_TU)
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok ? avx2_kernels_compiled() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(PDIR_HAVE_NEON_TU)
    return neon_kernels_compiled();
#else
    return nullptr;
#endif
}

const KernelTable& kernels() {
    static const KernelTable* chosen = [] {
        const char* env = std::getenv("PDIR_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
        if (const auto* k = avx2_kernels()) return k;
        if (const auto* k = neon_kernels()) return k;
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace pdir::simd
