#include "spectral/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spectral/errors.hpp"

namespace pdir {

Grid Grid::make(int n, int Nx, int Nt, double Lx, std::optional<double> Lt) {
    Grid g{n, Nx, Nt, Lx, Lt.value_or(Lx * Lx)};
    g.validate();
    return g;
}

void Grid::validate() const {
    if (n < 1 || n > kMaxSpatialDim)
        throw UsageError("grid: spatial dimension must be in [1," + std::to_string(kMaxSpatialDim) + "]");
    if (Nx < 4 || Nx % 2 != 0) throw UsageError("grid: Nx must be even and >= 4");
    if (Nt < 4 || Nt % 2 != 0) throw UsageError("grid: Nt must be even and >= 4");
    if (!(Lx > 0.0) || !(Lt > 0.0)) throw UsageError("grid: periods must be positive");
}

std::size_t Grid::spatial_points() const {
    std::size_t s = 1;
    for (int d = 0; d < n; ++d) s *= static_cast<std::size_t>(Nx);
    return s;
}

double Grid::cell_volume() const { return std::pow(dx(), n) * dt(); }

std::array<int, kMaxSpatialDim> Grid::spatial_index(std::size_t flat_idx) const {
    std::array<int, kMaxSpatialDim> ix{};
    std::size_t s = flat_idx / static_cast<std::size_t>(Nt);
    for (int d = n - 1; d >= 0; --d) {
        ix[d] = static_cast<int>(s % static_cast<std::size_t>(Nx));
        s /= static_cast<std::size_t>(Nx);
    }
    return ix;
}

std::size_t Grid::flat(const std::array<int, kMaxSpatialDim>& ix, int it) const {
    std::size_t s = 0;
    for (int d = 0; d < n; ++d) s = s * static_cast<std::size_t>(Nx) + static_cast<std::size_t>(ix[d]);
    return s * static_cast<std::size_t>(Nt) + static_cast<std::size_t>(it);
}

Frequency Grid::frequency(std::size_t flat_idx) const {
    Frequency f;
    const auto ix = spatial_index(flat_idx);
    for (int d = 0; d < n; ++d) {
        f.k[d] = signed_mode(ix[d], Nx);
        f.xi[d] = 2.0 * std::numbers::pi * f.k[d] / Lx;
    }
    f.m = signed_mode(time_index(flat_idx), Nt);
    f.tau = 2.0 * std::numbers::pi * f.m / Lt;
    return f;
}

std::array<double, kMaxSpatialDim> Grid::x_of(std::size_t flat_idx) const {
    const auto ix = spatial_index(flat_idx);
    std::array<double, kMaxSpatialDim> x{};
    for (int d = 0; d < n; ++d) x[d] = ix[d] * dx();
    return x;
}

}  // namespace pdir
