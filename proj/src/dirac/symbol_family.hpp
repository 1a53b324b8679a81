#pragma once
#include "dirac/coefficients.hpp"
#include "spectral/grid.hpp"

namespace pdir::dirac {

// (n+2)x(n+2) symbol of P at one frequency. Rows: perp (0, i xi^T, -|tau|^{1/2}),
// parallel (-i xi, 0, 0), theta (-i sgn(tau)|tau|^{1/2}, 0, 0).
Mat dirac_symbol(const Frequency& f, int n);
// symbol of P*, the conjugate transpose
Mat dirac_symbol_adjoint(const Frequency& f, int n);

// m = [[A^hat, 0], [0, 1]] for constant A
Mat coefficient_multiplier(const Mat& A);
Mat coefficient_multiplier(const CoefficientMatrix& A);
// N = diag(-1, Id, 1)
Mat reflection(int n);
// N m^* N
Mat backward_multiplier(const Mat& m);
// Closed form of p^* N + N p: only the (perp, theta) and (theta, perp) entries survive.
Mat adjoint_anticommutator(const Frequency& f, int n);

// Unit vectors spanning ran(p) at a nonzero frequency: e_perp and
// e_r = (0, xi, sgn(tau)|tau|^{1/2}) / sqrt(|xi|^2 + |tau|).
Vec e_perp(int n);
Vec e_r(const Frequency& f, int n);
// D_r multiplier in e_r coordinates: i sqrt(|xi|^2 + |tau|)
cd d_r(const Frequency& f);

struct ModeSymbols {
    Frequency f;
    Mat p, pm, mp;
};

// Per-frequency symbols on a grid with a fixed constant multiplier m.
class DiracSymbolFamily {
public:
    // m = identity (heat)
    explicit DiracSymbolFamily(const Grid& g);
    DiracSymbolFamily(const Grid& g, const CoefficientMatrix& A);

    const Grid& grid() const { return grid_; }
    int n() const { return grid_.n; }
    const Mat& m() const { return m_; }
    const Mat& A() const { return A_; }
    ModeSymbols mode(std::size_t flat) const;
    ModeSymbols mode(const Frequency& f) const;

private:
    Grid grid_;
    Mat A_, m_;
};

}  // namespace pdir::dirac
