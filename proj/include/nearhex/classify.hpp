#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nearhex/group.hpp"
#include "nearhex/veldkamp.hpp"

namespace nearhex {

// Setwise-fixed lines of one group element, split by how the element
// permutes the three members: all fixed / one fixed + a swap / a 3-cycle.
struct FixDecomposition {
  long fix1 = 0, fix2 = 0, fix3 = 0;
  long total() const { return fix1 + fix2 + fix3; }
  friend bool operator==(const FixDecomposition&, const FixDecomposition&) = default;
};

// fix1 from the fixed subspace, fix2 = |{x: gx!=x, g^2x=x}|/2,
// fix3 = |{x: gx!=x, g^2x = x^gx}|/3.
FixDecomposition fix_decomposition(const std::array<std::uint16_t, 1024>& act);

// Independent cross-check: direct scan over all 174251 lines.
long count_setwise_fixed(const VeldkampSpace& vs,
                         const std::array<std::uint16_t, 1024>& act);

enum class GroupAction { kGqHyperplanes, kGqLines, kNhHyperplanes, kNhLines };

// Class-weighted fixed-point sum; must be divisible by the group order.
struct BurnsideResult {
  long weighted_sum = 0;
  long group_order = 0;
  long orbits = 0;
};
BurnsideResult burnside_count(const VeldkampSpace& vs,
                              const AutomorphismGroup& grp, GroupAction action);

struct OrbitPartition {
  std::vector<std::int32_t> orbit_of;  // per line index
  std::vector<long> sizes;
  std::vector<std::int32_t> rep;       // smallest line index per orbit
  int count() const { return static_cast<int>(sizes.size()); }
};

// Generator-closure BFS over all lines.
OrbitPartition enumerate_orbits(const VeldkampSpace& vs,
                                const AutomorphismGroup& grp);

// Invariant fingerprint of a line: core size, core lines, point-order
// histogram, member-type histogram, multiset of the core's quad shapes.
struct CoreProfile {
  std::uint8_t pt = 0, ln = 0;
  std::array<std::uint8_t, 5> orders{};
  std::array<std::uint8_t, 8> comp{};
  std::array<QuadLabel, 3> labels{};  // sorted
  friend bool operator==(const CoreProfile&, const CoreProfile&) = default;
  friend auto operator<=>(const CoreProfile&, const CoreProfile&) = default;
};

Mask45 core_of_line(const VeldkampSpace& vs, VLine l);
CoreProfile core_profile(const VeldkampSpace& vs, VLine l);
std::array<QuadLabel, 3> core_layer_labels(const VeldkampSpace& vs, Mask45 core);

// Footnote discriminators evaluated on a core.  Footnotes 1,2,3,5,8,9,10,11
// return 0/1; 4, 6 and 7 return the stated count.  Star and Dagger return
// how many of the two candidate centers are matched by the relevant
// type-one line.  Throws std::invalid_argument when the core's quad shapes
// do not fit the footnote.
enum class Footnote : std::uint8_t {
  kF1 = 1, kF2, kF3, kF4, kF5, kF6, kF7, kF8, kF9, kF10, kF11,
  kStar = 12, kDagger = 13,
};
int discriminator_value(const GqGeometry& gq, Mask45 core, Footnote fn);

struct OrbitRecord {
  int orbit_id = -1;
  long size = 0;
  VLine rep{};
  CoreProfile profile{};
  std::array<QuadLabel, 3> rep_labels{};  // layer order of the representative
  int table_row = 0;       // matched reference row (1..156), 0 = unmatched
  bool orders_match = true;  // false: matched ignoring the order histogram
  int footnote = 0;        // reference footnote used for the match, 0 = none
  int fn_value = -1;       // discriminator value on the representative core
  int split_value = -1;    // star/dagger measurement, when applicable
};

struct Classification {
  OrbitPartition orbits;
  std::vector<OrbitRecord> records;  // sorted: desc pt, desc ln, orders, comp
  // groups of record indices sharing one profile (size > 1 only)
  std::vector<std::vector<int>> collision_groups;
};

Classification classify_lines(const VeldkampSpace& vs,
                              const AutomorphismGroup& grp);

}  // namespace nearhex
