#pragma once
// Naive O(N^2) unitary DFT over a row-major multi-dimensional array.
#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

inline std::vector<cd> dft(const std::vector<cd>& in, const std::vector<int>& dims, int sign = -1) {
    const std::size_t total = in.size();
    const std::size_t d = dims.size();
    std::vector<std::size_t> stride(d, 1);
    for (std::size_t a = d - 1; a-- > 0;) stride[a] = stride[a + 1] * static_cast<std::size_t>(dims[a + 1]);
    auto unflat = [&](std::size_t f) {
        std::vector<int> ix(d);
        for (std::size_t a = 0; a < d; ++a) ix[a] = static_cast<int>((f / stride[a]) % static_cast<std::size_t>(dims[a]));
        return ix;
    };
    std::vector<cd> out(total);
    double scale = 1.0;
    for (int n : dims) scale *= n;
    scale = 1.0 / std::sqrt(scale);
    for (std::size_t k = 0; k < total; ++k) {
        const auto kk = unflat(k);
        cd acc = 0.0;
        for (std::size_t j = 0; j < total; ++j) {
            const auto jj = unflat(j);
            double ph = 0.0;
            for (std::size_t a = 0; a < d; ++a) ph += static_cast<double>(kk[a]) * jj[a] / dims[a];
            acc += in[j] * std::polar(1.0, sign * 2.0 * M_PI * ph);
        }
        out[k] = acc * scale;
    }
    return out;
}

}  // namespace oracle
