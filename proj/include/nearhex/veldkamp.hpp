#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nearhex/geometry.hpp"

namespace nearhex {

// Hyperplane id: the 10-bit coordinate vector over the basis b1..b10,
// range 1..1023 (0 is the zero vector, i.e. the full 45-point set, and is
// not a hyperplane).  b_k (k=1..5) is the hyperplane that is deep in
// layer 0 and carries ovoid e_k in layers 1 and 2; b_{k+5} is deep in
// layer 1 with e_k in layers 0 and 2.  id = coord(layer 1) | coord(layer 0)<<5,
// where coord() is the GQ(2,2)-level coordinate over e1..e5 (0 = full quad).
// Veldkamp sum is XOR of ids.
using HypId = std::uint16_t;

// Canonical Veldkamp line: a < b < c and c == a^b.
struct VLine {
  HypId a = 0, b = 0, c = 0;
  friend bool operator==(const VLine&, const VLine&) = default;
};

// Nontrivial 2-part set partition {S|T} of {1..6}, stored as the side
// containing element 1 (bit k = element k+1, so bit 0 is always set and
// side != 0x3f).  Exactly 31 values.
struct SetPartition {
  std::uint8_t side = 0;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

bool is_valid_partition(SetPartition p);

// Veldkamp sum of two partitions, computed set-theoretically:
// {A|B} + {C|D} = {(A&C)|(B&D) , (A&D)|(B&C)}.  Equal inputs give the
// trivial partition (the zero element), signalled as nullopt.
std::optional<SetPartition> partition_sum(SetPartition a, SetPartition b);

// Quadruple (A,B,C,D) of pairwise disjoint sets covering {1..6}, encoded by
// which part holds each element: part[k] in 0..3 is the part of element k+1.
// The four Klein-group images act by XORing all part values with 0..3; the
// canonical form is the least image, i.e. part[0] == 0.
struct Quadruple {
  std::array<std::uint8_t, 6> part{};
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

Quadruple canonical_quadruple(Quadruple q);

enum class HypType : std::uint8_t { kH1 = 1, kH2, kH3, kH4, kH5, kH6, kH7, kH8 };

inline int type_index(HypType t) { return static_cast<int>(t); }
const char* to_token(HypType t);

// The F2 linear algebra of the 1023 geometric hyperplanes of L3 x GQ(2,2)
// and the 174251 Veldkamp lines, with the quadruple and partition codings.
class VeldkampSpace {
 public:
  static constexpr int kHyperplanes = 1023;
  static constexpr int kLineCount = 174251;

  explicit VeldkampSpace(const NearHexagon& nh);

  const NearHexagon& hexagon() const { return *nh_; }

  // --- GQ(2,2) level ----------------------------------------------------
  Mask15 ovoid(int i) const;  // e_i, i in 1..6: all duads containing i
  Mask15 gq_point_set(std::uint8_t coord) const { return gq_sets_[coord]; }
  // 5-bit coordinate of a GQ hyperplane (or of the full quad -> 0).
  // Throws std::invalid_argument if the set is not in the span.
  std::uint8_t gq_coord(Mask15 set) const;

  SetPartition partition_of(std::uint8_t coord) const;  // coord != 0
  std::uint8_t coord_of_partition(SetPartition p) const;

  // --- near-hexagon level -----------------------------------------------
  Mask45 point_set(HypId h) const { return point_sets_[h]; }
  // Inverse of point_set; accepts the full set (-> 0).  Throws if the set
  // is not a span element.
  HypId id_of(Mask45 set) const;

  // Veldkamp sum; nullopt when a == b (the sum would be the full set).
  std::optional<HypId> sum(HypId a, HypId b) const;

  HypType type(HypId h) const { return static_cast<HypType>(types_[h]); }
  Quadruple quadruple_of(HypId h) const;
  // Throws std::invalid_argument unless at least two parts are nonempty.
  HypId id_of_quadruple(const Quadruple& q) const;

  // All 174251 canonical lines, ordered lexicographically by (a, b).
  const std::vector<VLine>& lines() const { return lines_; }
  // Index into lines() of the line spanned by two distinct hyperplanes.
  int line_index(HypId a, HypId b) const;

  // GQ(2,2)-level Veldkamp lines over ids 1..31 (155 of them).
  const std::vector<std::array<std::uint8_t, 3>>& gq_lines() const {
    return gq_vlines_;
  }

 private:
  const NearHexagon* nh_;
  std::array<Mask15, 7> ovoids_{};        // 1..6
  std::array<Mask15, 32> gq_sets_{};      // coord -> point set
  std::array<std::int8_t, 1 << 15> coord_of_comp_{};  // complement -> coord
  std::array<std::uint8_t, 64> vec_of_subset_{};      // subset of {1..6} -> coord
  std::array<std::uint8_t, 32> subset_of_vec_{};      // coord -> side with 1
  std::vector<Mask45> point_sets_;        // 1024
  std::vector<std::uint8_t> types_;       // 1024, 0 unused
  std::vector<VLine> lines_;
  std::vector<std::int32_t> line_idx_;    // (a<<10)|b for the two least members
  std::vector<std::array<std::uint8_t, 3>> gq_vlines_;
};

}  // namespace nearhex
