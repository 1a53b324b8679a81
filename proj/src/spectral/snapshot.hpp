#pragma once
#include <iosfwd>
#include <vector>

#include "spectral/field.hpp"
#include "spectral/profile.hpp"

namespace pdir {

// Binary snapshot: 32-byte header ("PDIR", version u32, n u32, Nx u32, Nt u32,
// side u8, component count u8, zero padding) then per component the row-major
// values as little-endian f64 (re, im) pairs.
inline constexpr std::uint32_t kSnapshotVersion = 1;

struct Snapshot {
    Grid grid;
    Space space = Space::physical;
    std::vector<ScalarField> components;
};

void write_snapshot(std::ostream& os, const std::vector<ScalarField>& components);
void write_snapshot(std::ostream& os, const ScalarField& f);
void write_snapshot(std::ostream& os, const ConormalField& f);
// The header carries no periods; Lx and Lt are supplied by the caller (Lt <= 0 means Lx^2).
Snapshot read_snapshot(std::istream& is, double Lx = 2.0 * 3.141592653589793, double Lt = 0.0);

// Profile stream: u32 node count, f64 nodes, then one snapshot per node.
void write_profile(std::ostream& os, const ScalarProfile& p);
void write_profile(std::ostream& os, const ConormalProfile& p);
struct ProfileSnapshot {
    std::vector<double> nodes;
    std::vector<Snapshot> slices;
};
ProfileSnapshot read_profile(std::istream& is, double Lx = 2.0 * 3.141592653589793, double Lt = 0.0);

}  // namespace pdir
