#include "spectral/field.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir {

ScalarField::ScalarField(const Grid& g, Space s) : grid_(g), values_(g.points()), space_(s) { g.validate(); }

ScalarField::ScalarField(const Grid& g, std::vector<cd> values, Space s)
    : grid_(g), values_(std::move(values)), space_(s) {
    g.validate();
    if (values_.size() != g.points()) throw UsageError("ScalarField: value count does not match grid");
}

ScalarField ScalarField::from_function(
    const Grid& g, const std::function<cd(const std::array<double, kMaxSpatialDim>&, double)>& f) {
    ScalarField out(g, Space::physical);
    for (std::size_t i = 0; i < g.points(); ++i) out[i] = f(g.x_of(i), g.t_of(i));
    return out;
}

double ScalarField::norm() const {
    double s = 0.0;
    for (const cd& v : values_) s += std::norm(v);
    return std::sqrt(grid_.cell_volume() * s);
}

void ScalarField::check_compatible(const ScalarField& o) const {
    if (!(grid_ == o.grid_) || space_ != o.space_) throw UsageError("ScalarField: grid or side mismatch");
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

ScalarField& ScalarField::operator*=(cd a) {
    for (cd& v : values_) v *= a;
    return *this;
}

ConormalField::ConormalField(const Grid& g, Space s) {
    components_.assign(static_cast<std::size_t>(g.n + 2), ScalarField(g, s));
}

ConormalField::ConormalField(std::vector<ScalarField> components) : components_(std::move(components)) {
    if (components_.empty()) throw UsageError("ConormalField: no components");
    const Grid& g = components_.front().grid();
    if (static_cast<int>(components_.size()) != g.n + 2)
        throw UsageError("ConormalField: expected n+2 components");
    for (const auto& c : components_)
        if (!(c.grid() == g) || c.space() != components_.front().space())
            throw UsageError("ConormalField: components disagree on grid or side");
}

double ConormalField::norm() const {
    double s = 0.0;
    for (const auto& c : components_) s += c.norm() * c.norm();
    return std::sqrt(s);
}

double ConormalField::norm_r() const {
    double s = 0.0;
    for (std::size_t c = 1; c < components_.size(); ++c) s += components_[c].norm() * components_[c].norm();
    return std::sqrt(s);
}

ConormalField& ConormalField::operator+=(const ConormalField& o) {
    if (o.ncomp() != ncomp()) throw UsageError("ConormalField: component count mismatch");
    for (std::size_t c = 0; c < components_.size(); ++c) components_[c] += o.components_[c];
    return *this;
}

ConormalField& ConormalField::operator-=(const ConormalField& o) {
    if (o.ncomp() != ncomp()) throw UsageError("ConormalField: component count mismatch");
    for (std::size_t c = 0; c < components_.size(); ++c) components_[c] -= o.components_[c];
    return *this;
}

ConormalField& ConormalField::operator*=(cd a) {
    for (auto& c : components_) c *= a;
    return *this;
}

double ConormalField::compatibility_residual() const {
    const ConormalField spec = space() == Space::spectral ? *this : to_spectral(*this);
    const Grid& g = grid();
    const int n = g.n;
    double res = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        const Frequency f = g.frequency(i);
        if (f.is_zero()) continue;
        const double a = std::sqrt(std::abs(f.tau));
        const cd th = spec.theta()[i];
        double rnorm = std::norm(th);
        for (int j = 0; j < n; ++j) {
            const cd pj = spec[1 + j][i];
            res += std::norm(cd(0, f.xi[j]) * th - cd(0, f.sgn_tau() * a) * pj);
            rnorm += std::norm(pj);
        }
        scale += (f.xi_norm2() + std::abs(f.tau)) * rnorm;
    }
    return scale > 0.0 ? std::sqrt(res / scale) : 0.0;
}

}  // namespace pdir
