#include "spectral/symbol.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "simd/kernels.hpp"
#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir {

ScalarField apply_symbol(const ParabolicSymbol& symbol, const ScalarField& field) {
    const Grid& g = field.grid();
    ScalarField spec = to_spectral(field);
    std::vector<cd> mult(g.points());
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency f = g.frequency(i);
        if (f.is_zero()) {
            mult[i] = symbol.at_origin;
            continue;
        }
        const cd v = symbol.eval(f);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            std::string where = "k=(";
            for (int d = 0; d < g.n; ++d) where += (d ? "," : "") + std::to_string(f.k[d]);
            where += "), m=" + std::to_string(f.m);
            throw DomainError("apply_symbol: symbol '" + symbol.name + "' is singular at " + where);
        }
        mult[i] = v;
    }
    simd::kernels().cmul(spec.values().data(), mult.data(), mult.size());
    return field.space() == Space::spectral ? spec : to_physical(spec);
}

namespace symbols {

ParabolicSymbol one() {
    return {"one", [](const Frequency&) { return cd(1.0); }, cd(1.0)};
}

ParabolicSymbol parabolic_power(double s, int sign) {
    return {"parabolic_power", [s, sign](const Frequency& f) {
                return std::pow(cd(f.xi_norm2(), sign * f.tau), s);
            },
            s == 0.0 ? cd(1.0) : cd(0.0)};
}

ParabolicSymbol time_derivative() {
    return {"dt", [](const Frequency& f) { return cd(0.0, f.tau); }};
}

ParabolicSymbol gradient(int j) {
    return {"grad", [j](const Frequency& f) { return cd(0.0, f.xi[static_cast<std::size_t>(j)]); }};
}

ParabolicSymbol half_derivative() {
    return {"D^1/2", [](const Frequency& f) { return cd(std::sqrt(std::abs(f.tau))); }};
}

ParabolicSymbol hilbert_half_derivative() {
    return {"HD^1/2", [](const Frequency& f) { return cd(0.0, f.sgn_tau() * std::sqrt(std::abs(f.tau))); }};
}

ParabolicSymbol hilbert() {
    return {"H", [](const Frequency& f) { return cd(0.0, f.sgn_tau()); }};
}

ParabolicSymbol time_power(double alpha) {
    return {"D^alpha", [alpha](const Frequency& f) {
                return f.tau == 0.0 ? cd(0.0) : cd(std::pow(std::abs(f.tau), alpha));
            }};
}

ParabolicSymbol parabolic_riesz() {
    return {"I_par", [](const Frequency& f) {
                return cd(1.0 / (std::sqrt(f.xi_norm2()) + std::sqrt(std::abs(f.tau))));
            }};
}

}  // namespace symbols

}  // namespace pdir
