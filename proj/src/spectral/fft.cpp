#include "spectral/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "spectral/errors.hpp"

namespace pdir {
namespace {

struct PlanKey {
    std::vector<int> dims;
    int sign;
    bool operator<(const PlanKey& o) const { return sign != o.sign ? sign < o.sign : dims < o.dims; }
};

class PlanCache {
public:
    ~PlanCache() {
        for (auto& [k, p] : plans_) fftw_destroy_plan(p);
    }

    fftw_plan get(const std::vector<int>& dims, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const PlanKey key{dims, sign};
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::size_t total = 1;
        for (int d : dims) total *= static_cast<std::size_t>(d);
        std::vector<cd> scratch(total);
        auto* raw = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), raw, raw, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr) throw InternalError("fft: planner failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<int> grid_dims(const Grid& g) {
    std::vector<int> dims(static_cast<std::size_t>(g.n), g.Nx);
    dims.push_back(g.Nt);
    return dims;
}

}  // namespace

void fft_inplace(std::span<cd> data, std::span<const int> dims, Direction dir) {
    std::vector<int> d(dims.begin(), dims.end());
    std::size_t total = 1;
    for (int x : d) {
        if (x < 1) throw UsageError("fft: extents must be positive");
        total *= static_cast<std::size_t>(x);
    }
    if (total != data.size()) throw UsageError("fft: data size does not match extents");
    fftw_plan p = cache().get(d, dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, raw, raw);
    const double s = 1.0 / std::sqrt(static_cast<double>(total));
    for (cd& v : data) v *= s;
}

ScalarField transform(const ScalarField& field, Direction dir) {
    const Space expected = dir == Direction::forward ? Space::physical : Space::spectral;
    if (field.space() != expected) throw UsageError("transform: field side does not match direction");
    std::vector<cd> v(field.values().begin(), field.values().end());
    const auto dims = grid_dims(field.grid());
    fft_inplace(v, dims, dir);
    return ScalarField(field.grid(), std::move(v), dir == Direction::forward ? Space::spectral : Space::physical);
}

ScalarField to_spectral(const ScalarField& f) {
    return f.space() == Space::spectral ? f : transform(f, Direction::forward);
}

ScalarField to_physical(const ScalarField& f) {
    return f.space() == Space::physical ? f : transform(f, Direction::inverse);
}

ConormalField to_spectral(const ConormalField& f) {
    std::vector<ScalarField> c;
    for (int i = 0; i < f.ncomp(); ++i) c.push_back(to_spectral(f[i]));
    return ConormalField(std::move(c));
}

ConormalField to_physical(const ConormalField& f) {
    std::vector<ScalarField> c;
    for (int i = 0; i < f.ncomp(); ++i) c.push_back(to_physical(f[i]));
    return ConormalField(std::move(c));
}

}  // namespace pdir
