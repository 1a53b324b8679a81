#pragma once
#include <array>
#include <complex>
#include <cstddef>
#include <optional>

namespace pdir {

using cd = std::complex<double>;

inline constexpr int kMaxSpatialDim = 3;

// A lattice frequency. Unused trailing entries of xi are zero.
struct Frequency {
    std::array<double, kMaxSpatialDim> xi{};
    double tau = 0.0;
    std::array<int, kMaxSpatialDim> k{};
    int m = 0;

    double xi_norm2() const { return xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]; }
    bool is_zero() const { return k == std::array<int, kMaxSpatialDim>{} && m == 0; }
    // |xi|^2 + i tau
    cd parabolic() const { return {xi_norm2(), tau}; }
    double sgn_tau() const { return tau > 0 ? 1.0 : (tau < 0 ? -1.0 : 0.0); }
};

// Periodic (x,t) torus. Flat layout is row-major over (x_1..x_n, t), t fastest.
// The spectral side uses the FFT ordering of each axis.
struct Grid {
    int n = 1;
    int Nx = 8;
    int Nt = 8;
    double Lx = 0.0;
    double Lt = 0.0;

    // Lt defaults to Lx^2 (parabolic aspect).
    static Grid make(int n, int Nx, int Nt, double Lx = 2.0 * 3.141592653589793,
                     std::optional<double> Lt = std::nullopt);

    void validate() const;

    std::size_t spatial_points() const;
    std::size_t points() const { return spatial_points() * static_cast<std::size_t>(Nt); }
    double dx() const { return Lx / Nx; }
    double dt() const { return Lt / Nt; }
    double cell_volume() const;

    // spatial multi-index and time index of a flat index
    std::array<int, kMaxSpatialDim> spatial_index(std::size_t flat) const;
    int time_index(std::size_t flat) const { return static_cast<int>(flat % static_cast<std::size_t>(Nt)); }
    std::size_t flat(const std::array<int, kMaxSpatialDim>& ix, int it) const;

    Frequency frequency(std::size_t flat) const;
    std::array<double, kMaxSpatialDim> x_of(std::size_t flat) const;
    double t_of(std::size_t flat) const { return time_index(flat) * dt(); }

    bool operator==(const Grid& o) const {
        return n == o.n && Nx == o.Nx && Nt == o.Nt && Lx == o.Lx && Lt == o.Lt;
    }
};

// FFT index -> signed lattice index in [-N/2, N/2)
inline int signed_mode(int idx, int N) { return idx < N / 2 ? idx : idx - N; }

}  // namespace pdir
