#include "fractime/poincare.hpp"

#include <cmath>
#include <limits>

#include "spectral/errors.hpp"

namespace pdir::fractime {

double fractional_poincare_ratio(std::span<const cd> h, double dt, IndexInterval J, const PoincareOptions& o) {
    if (!(o.alpha > 0.0 && o.alpha <= 0.5)) throw UsageError("fractional_poincare_ratio: alpha must lie in (0,1/2]");
    if (!((1.0 - o.alpha) * o.p < o.q && o.q <= o.p)) throw UsageError("fractional_poincare_ratio: need (1-alpha)p < q <= p");
    if (o.N < 2) throw UsageError("fractional_poincare_ratio: N >= 2 required");
    if (J.length() == 0 || J.last > h.size()) throw UsageError("fractional_poincare_ratio: empty or out-of-range interval");

    const double centre = 0.5 * static_cast<double>(J.first + J.last);
    const double half = 0.5 * static_cast<double>(J.length());
    std::vector<IndexInterval> dilates;
    for (int l = 1;; ++l) {
        const double r = half * std::pow(o.N, l);
        const double lo = centre - r, hi = centre + r;
        if (lo < 0.0 || hi > static_cast<double>(h.size())) break;
        dilates.push_back({static_cast<std::size_t>(std::lround(lo)), static_cast<std::size_t>(std::lround(hi))});
    }
    if (dilates.size() < 2) throw DomainError("fractional_poincare_ratio: interval too close to the window edge");

    const double a = o.alpha;
    auto sym = [a, var = o.variant](double tau) {
        const double m = std::pow(std::abs(tau), a);
        return var == HalfVariant::plain ? cd(m) : cd(0.0, (tau > 0) - (tau < 0)) * m;
    };
    const auto Dh = line_multiplier(h, dt, sym, o.pad);

    cd mean = 0.0;
    for (std::size_t j = J.first; j < J.last; ++j) mean += h[j];
    mean /= static_cast<double>(J.length());
    double lhs = 0.0;
    for (std::size_t j = J.first; j < J.last; ++j) lhs += std::pow(std::abs(h[j] - mean), o.p);
    lhs = std::pow(lhs / static_cast<double>(J.length()), 1.0 / o.p);

    double sum = 0.0;
    for (std::size_t l = 0; l < dilates.size(); ++l) {
        const auto& I = dilates[l];
        double avg = 0.0;
        for (std::size_t j = I.first; j < I.last; ++j) avg += std::pow(std::abs(Dh[j]), o.q);
        avg /= static_cast<double>(I.length());
        sum += std::pow(static_cast<double>(o.N), (a - 1.0) * static_cast<double>(l + 1)) * avg;
    }
    const double rhs = std::pow(dt * static_cast<double>(J.length()), a) * std::pow(sum, 1.0 / o.q);
    const double floor = 1e-14 * (1.0 + lhs);
    if (rhs <= floor) return lhs <= floor ? 0.0 : std::numeric_limits<double>::infinity();
    return lhs / rhs;
}

}  // namespace pdir::fractime
