#pragma once
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "spectral/grid.hpp"

namespace pdir {

enum class Space : std::uint8_t { physical = 0, spectral = 1 };

// Complex samples on a Grid, either at grid points or at lattice frequencies.
// Spectral coefficients use the unitary DFT, so sum|v|^2 is side-independent.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g, Space s = Space::physical);
    ScalarField(const Grid& g, std::vector<cd> values, Space s);

    static ScalarField from_function(const Grid& g,
                                     const std::function<cd(const std::array<double, kMaxSpatialDim>&, double)>& f);

    const Grid& grid() const { return grid_; }
    Space space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    std::span<cd> values() { return values_; }
    std::span<const cd> values() const { return values_; }
    cd& operator[](std::size_t i) { return values_[i]; }
    const cd& operator[](std::size_t i) const { return values_[i]; }

    // L^2(torus) norm: sqrt(cell volume * sum |v|^2), valid on either side
    double norm() const;

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(cd a);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(cd a, ScalarField b) { return b *= a; }

private:
    void check_compatible(const ScalarField& o) const;

    Grid grid_{};
    std::vector<cd> values_;
    Space space_ = Space::physical;
};

// C^{n+2}-valued field: component 0 is the normal part, 1..n the spatial
// gradient part, n+1 the time part. The r-block is components 1..n+1.
class ConormalField {
public:
    ConormalField() = default;
    explicit ConormalField(const Grid& g, Space s = Space::physical);
    explicit ConormalField(std::vector<ScalarField> components);

    const Grid& grid() const { return components_.front().grid(); }
    Space space() const { return components_.front().space(); }
    int ncomp() const { return static_cast<int>(components_.size()); }
    int theta_index() const { return ncomp() - 1; }

    ScalarField& operator[](int c) { return components_[static_cast<std::size_t>(c)]; }
    const ScalarField& operator[](int c) const { return components_[static_cast<std::size_t>(c)]; }
    ScalarField& perp() { return components_.front(); }
    const ScalarField& perp() const { return components_.front(); }
    ScalarField& theta() { return components_.back(); }
    const ScalarField& theta() const { return components_.back(); }

    double norm() const;
    // norm of the r-block (components 1..n+1)
    double norm_r() const;

    ConormalField& operator+=(const ConormalField& o);
    ConormalField& operator-=(const ConormalField& o);
    ConormalField& operator*=(cd a);
    friend ConormalField operator+(ConormalField a, const ConormalField& b) { return a += b; }
    friend ConormalField operator-(ConormalField a, const ConormalField& b) { return a -= b; }

    // Relative residual of the range-of-P condition
    // i xi_j f_theta = i sgn(tau)|tau|^{1/2} f_par_j at every nonzero frequency.
    double compatibility_residual() const;

private:
    std::vector<ScalarField> components_;
};

}  // namespace pdir
