#include "spectral/snapshot.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <istream>
#include <ostream>

#include "spectral/errors.hpp"

namespace pdir {
namespace {

template <class T>
T to_le(T v) {
    if constexpr (std::endian::native == std::endian::little) {
        return v;
    } else {
        std::array<unsigned char, sizeof(T)> b;
        std::memcpy(b.data(), &v, sizeof(T));
        std::reverse(b.begin(), b.end());
        std::memcpy(&v, b.data(), sizeof(T));
        return v;
    }
}

template <class T>
void put(std::ostream& os, T v) {
    v = to_le(v);
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
    T v{};
    if (!is.read(reinterpret_cast<char*>(&v), sizeof(T))) throw UsageError("snapshot: truncated stream");
    return to_le(v);
}

}  // namespace

void write_snapshot(std::ostream& os, const std::vector<ScalarField>& comps) {
    if (comps.empty() || comps.size() > 255) throw UsageError("snapshot: component count must be in [1,255]");
    const Grid& g = comps.front().grid();
    os.write("PDIR", 4);
    put<std::uint32_t>(os, kSnapshotVersion);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.n));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.Nx));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(g.Nt));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(comps.front().space()));
    put<std::uint8_t>(os, static_cast<std::uint8_t>(comps.size()));
    const char pad[10] = {};
    os.write(pad, sizeof pad);
    for (const auto& c : comps) {
        if (!(c.grid() == g) || c.space() != comps.front().space())
            throw UsageError("snapshot: components disagree on grid or side");
        for (const cd& v : c.values()) {
            put<double>(os, v.real());
            put<double>(os, v.imag());
        }
    }
    if (!os) throw Error("snapshot: write failed");
}

void write_snapshot(std::ostream& os, const ScalarField& f) { write_snapshot(os, std::vector<ScalarField>{f}); }

void write_snapshot(std::ostream& os, const ConormalField& f) {
    std::vector<ScalarField> c;
    for (int i = 0; i < f.ncomp(); ++i) c.push_back(f[i]);
    write_snapshot(os, c);
}

Snapshot read_snapshot(std::istream& is, double Lx, double Lt) {
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "PDIR", 4) != 0) throw UsageError("snapshot: bad magic");
    const auto version = get<std::uint32_t>(is);
    if (version != kSnapshotVersion) throw UsageError("snapshot: unsupported version");
    const auto n = get<std::uint32_t>(is);
    const auto Nx = get<std::uint32_t>(is);
    const auto Nt = get<std::uint32_t>(is);
    const auto side = get<std::uint8_t>(is);
    const auto ncomp = get<std::uint8_t>(is);
    char pad[10];
    if (!is.read(pad, sizeof pad)) throw UsageError("snapshot: truncated header");
    if (side > 1) throw UsageError("snapshot: bad side marker");
    Snapshot s;
    s.grid = Grid::make(static_cast<int>(n), static_cast<int>(Nx), static_cast<int>(Nt), Lx,
                        Lt > 0.0 ? std::optional<double>(Lt) : std::nullopt);
    s.space = static_cast<Space>(side);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<cd> v(s.grid.points());
        for (cd& x : v) {
            const double re = get<double>(is);
            const double im = get<double>(is);
            x = {re, im};
        }
        s.components.emplace_back(s.grid, std::move(v), s.space);
    }
    return s;
}

namespace {
template <class P, class Write>
void write_profile_impl(std::ostream& os, const P& p, Write write_one) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(p.nodes.size()));
    for (std::size_t j = 0; j < p.nodes.size(); ++j) put<double>(os, p.lambda(j));
    for (const auto& f : p.fields) write_one(os, f);
}
}  // namespace

void write_profile(std::ostream& os, const ScalarProfile& p) {
    write_profile_impl(os, p, [](std::ostream& o, const ScalarField& f) { write_snapshot(o, f); });
}

void write_profile(std::ostream& os, const ConormalProfile& p) {
    write_profile_impl(os, p, [](std::ostream& o, const ConormalField& f) { write_snapshot(o, f); });
}

ProfileSnapshot read_profile(std::istream& is, double Lx, double Lt) {
    ProfileSnapshot out;
    const auto count = get<std::uint32_t>(is);
    for (std::uint32_t j = 0; j < count; ++j) out.nodes.push_back(get<double>(is));
    for (std::uint32_t j = 0; j < count; ++j) out.slices.push_back(read_snapshot(is, Lx, Lt));
    return out;
}

}  // namespace pdir
