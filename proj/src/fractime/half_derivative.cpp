#include "fractime/half_derivative.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"
#include "spectral/symbol.hpp"

namespace pdir::fractime {

ScalarField half_derivative(const ScalarField& field, HalfVariant variant) {
    return apply_symbol(variant == HalfVariant::plain ? symbols::half_derivative() : symbols::hilbert_half_derivative(),
                        field);
}

ScalarField hilbert_transform(const ScalarField& field) { return apply_symbol(symbols::hilbert(), field); }

ScalarField parabolic_riesz_potential(const ScalarField& g) { return apply_symbol(symbols::parabolic_riesz(), g); }

std::vector<cd> line_multiplier(std::span<const cd> samples, double dt, const std::function<cd(double)>& symbol,
                                int pad) {
    if (pad < 1 || !(dt > 0.0)) throw UsageError("line_multiplier: pad >= 1 and dt > 0 required");
    const std::size_t N = samples.size();
    const std::size_t M = N * static_cast<std::size_t>(pad);
    std::vector<cd> buf(M, cd(0.0));
    std::copy(samples.begin(), samples.end(), buf.begin());
    const int dims[1] = {static_cast<int>(M)};
    fft_inplace(buf, dims, Direction::forward);
    const double L = dt * static_cast<double>(M);
    for (std::size_t k = 0; k < M; ++k) {
        const int m = signed_mode(static_cast<int>(k), static_cast<int>(M));
        buf[k] *= m == 0 ? symbol(0.0) : symbol(2.0 * M_PI * m / L);
    }
    fft_inplace(buf, dims, Direction::inverse);
    buf.resize(N);
    return buf;
}

std::vector<cd> half_derivative_spectral(std::span<const cd> samples, double dt, HalfVariant variant, int pad) {
    if (variant == HalfVariant::plain)
        return line_multiplier(samples, dt, [](double tau) { return cd(std::sqrt(std::abs(tau))); }, pad);
    return line_multiplier(
        samples, dt,
        [](double tau) { return cd(0.0, (tau > 0) - (tau < 0)) * std::sqrt(std::abs(tau)); }, pad);
}

}  // namespace pdir::fractime
