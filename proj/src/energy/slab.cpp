#include "energy/slab.hpp"

#include <cmath>

#include "spectral/errors.hpp"
#include "spectral/fft.hpp"

namespace pdir::energy {

void DiscreteSlab::validate() const {
    base.validate();
    if (Nlambda < 8) throw UsageError("slab: Nlambda must be at least 8");
    if (!(Lambda >= 1.0)) throw UsageError("slab: Lambda must be at least 1");
}

SlabFunction SlabFunction::zeros(const DiscreteSlab& s) {
    return {std::vector<ScalarField>(static_cast<std::size_t>(s.Nlambda), ScalarField(s.base))};
}

CVec SlabFunction::to_vector() const {
    const std::size_t P = nodes.front().size();
    CVec v(static_cast<Eigen::Index>(P * nodes.size()));
    for (std::size_t j = 0; j < nodes.size(); ++j)
        for (std::size_t i = 0; i < P; ++i) v(static_cast<Eigen::Index>(j * P + i)) = nodes[j][i];
    return v;
}

SlabFunction SlabFunction::from_vector(const DiscreteSlab& s, const CVec& v) {
    if (static_cast<std::size_t>(v.size()) != s.dof()) throw UsageError("slab function: vector size does not match the slab");
    SlabFunction f = zeros(s);
    const std::size_t P = s.base.points();
    for (std::size_t j = 0; j < f.nodes.size(); ++j)
        for (std::size_t i = 0; i < P; ++i) f.nodes[j][i] = v(static_cast<Eigen::Index>(j * P + i));
    return f;
}

double SlabFunction::norm(const DiscreteSlab& s) const {
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const double n2 = nodes[j].norm();
        acc += (j == 0 ? 0.5 : 1.0) * s.h() * n2 * n2;
    }
    return std::sqrt(acc);
}

SlabFunction random_slab_function(const DiscreteSlab& s, std::mt19937_64& rng, int band) {
    std::normal_distribution<double> nd;
    SlabFunction f = SlabFunction::zeros(s);
    const Grid& g = s.base;
    for (auto& node : f.nodes) {
        ScalarField c(g, Space::spectral);
        for (std::size_t i = 0; i < g.points(); ++i) {
            const Frequency q = g.frequency(i);
            bool in = std::abs(q.m) <= band;
            for (int d = 0; d < g.n; ++d) in = in && std::abs(q.k[static_cast<std::size_t>(d)]) <= band;
            if (in) c[i] = cd(nd(rng), nd(rng));
        }
        node = to_physical(c);
    }
    return f;
}

}  // namespace pdir::energy
