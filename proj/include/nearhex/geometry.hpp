#pragma once

#include <array>
#include <cstdint>

#include "nearhex/masks.hpp"

namespace nearhex {

// A point of GQ(2,2) in the duad model: a 2-subset {lo,hi} of {1..6}.
// Point indices are lexicographic: {1,2}=0, {1,3}=1, ..., {5,6}=14.
struct Duad {
  std::uint8_t lo = 0, hi = 0;
  friend bool operator==(const Duad&, const Duad&) = default;
};

// Shape of a subset of one GQ(2,2) quad, as used in the core tables.
enum class QuadLabel : std::uint8_t {
  kFull,
  kGrid,
  kPerp,
  kOvoid,
  kGPerp,
  kLine,
  kTriTriad,
  kUniTriad,
  kSinglePoint,
  kEmpty,
  kOther,
};

const char* to_token(QuadLabel label);

// GQ(2,2): duads of {1..6}, collinear iff disjoint.  The 15 lines are the
// partitions of {1..6} into three duads; every point lies on 3 of them.
class GqGeometry {
 public:
  static constexpr int kPoints = 15;
  static constexpr int kLines = 15;

  GqGeometry();

  Duad duad(int p) const { return duads_[p]; }
  int duad_index(Duad d) const;

  const std::array<std::uint8_t, 3>& line(int l) const { return lines_[l]; }
  Mask15 line_mask(int l) const { return line_masks_[l]; }
  const std::array<std::uint8_t, 3>& lines_through(int p) const {
    return lines_through_[p];
  }

  bool collinear(int p, int q) const { return (neighbors(p) >> q) & 1; }
  Mask15 neighbors(int p) const { return adj_[p]; }           // p excluded
  Mask15 perp(int p) const { return adj_[p] | Mask15(1u << p); }

  // The ten 3x3 grids (GQ(2,1) subquadrangles), one per {3|3} split of {1..6}.
  const std::array<Mask15, 10>& grids() const { return grids_; }

  QuadLabel classify_subset(Mask15 s) const;

  // Common neighbours of a triad (3 pairwise non-collinear points).
  // Throws std::invalid_argument if s is not a triad.
  Mask15 triad_centers(Mask15 s) const;

 private:
  std::array<Duad, 15> duads_;
  std::array<std::array<std::uint8_t, 3>, 15> lines_;
  std::array<Mask15, 15> line_masks_;
  std::array<std::array<std::uint8_t, 3>, 15> lines_through_;
  std::array<Mask15, 15> adj_;
  std::array<Mask15, 10> grids_;
};

enum class LineKind : std::uint8_t { kTypeOne, kTypeTwo };

// L3 x GQ(2,2): 45 points (id = 15*layer + gq point), 60 lines.
// Lines 0..14 are type-one (one GQ point through all three layers);
// lines 15..59 are type-two (a GQ line inside one layer), layer-major.
class NearHexagon {
 public:
  static constexpr int kPoints = 45;
  static constexpr int kLines = 60;

  NearHexagon();

  const GqGeometry& gq() const { return gq_; }

  static int point_id(int layer, int gq_point) { return 15 * layer + gq_point; }
  static int layer_of(int p) { return p / 15; }
  static int gq_of(int p) { return p % 15; }

  const std::array<std::uint8_t, 3>& line(int l) const { return lines_[l]; }
  LineKind line_kind(int l) const {
    return l < 15 ? LineKind::kTypeOne : LineKind::kTypeTwo;
  }
  Mask45 line_mask(int l) const { return line_masks_[l]; }
  const std::array<std::uint8_t, 4>& lines_through(int p) const {
    return lines_through_[p];
  }

  // Proper subset meeting every line in exactly 1 or 3 points.
  // Throws std::invalid_argument if s has bits outside 0..44.
  bool is_geometric_hyperplane(Mask45 s) const;

  // Number of the 60 lines fully contained in s.
  int lines_contained(Mask45 s) const;

  // Number of lines through p fully contained in core (0..4).
  // Throws std::invalid_argument if p is not a point of core.
  int point_order(Mask45 core, int p) const;

 private:
  GqGeometry gq_;
  std::array<std::array<std::uint8_t, 3>, 60> lines_;
  std::array<Mask45, 60> line_masks_;
  std::array<std::array<std::uint8_t, 4>, 45> lines_through_;
};

}  // namespace nearhex
