#include "nearhex/geometry.hpp"

#include <stdexcept>

namespace nearhex {

const char* to_token(QuadLabel label) {
  switch (label) {
    case QuadLabel::kFull: return "full";
    case QuadLabel::kGrid: return "grid";
    case QuadLabel::kPerp: return "perp";
    case QuadLabel::kOvoid: return "ovoid";
    case QuadLabel::kGPerp: return "gperp";
    case QuadLabel::kLine: return "line";
    case QuadLabel::kTriTriad: return "tritr";
    case QuadLabel::kUniTriad: return "unitr";
    case QuadLabel::kSinglePoint: return "point";
    case QuadLabel::kEmpty: return "empty";
    case QuadLabel::kOther: return "other";
  }
  return "?";
}

GqGeometry::GqGeometry() {
  int k = 0;
  for (std::uint8_t i = 1; i <= 6; ++i)
    for (std::uint8_t j = static_cast<std::uint8_t>(i + 1); j <= 6; ++j)
      duads_[k++] = Duad{i, j};

  auto elems = [&](int p) {
    return (1u << duads_[p].lo) | (1u << duads_[p].hi);
  };

  adj_ = {};
  for (int p = 0; p < kPoints; ++p)
    for (int q = 0; q < kPoints; ++q)
      if (p != q && (elems(p) & elems(q)) == 0) adj_[p] |= Mask15(1u << q);

  // lines = partitions of {1..6} into three duads
  int nl = 0;
  for (int a = 0; a < kPoints; ++a)
    for (int b = a + 1; b < kPoints; ++b) {
      if (elems(a) & elems(b)) continue;
      unsigned rest = 0x7eu & ~(elems(a) | elems(b));
      std::uint8_t lo = static_cast<std::uint8_t>(std::countr_zero(rest));
      std::uint8_t hi = static_cast<std::uint8_t>(
          std::countr_zero(rest & (rest - 1)));
      int c = duad_index(Duad{lo, hi});
      if (c <= b) continue;
      lines_[nl] = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                    static_cast<std::uint8_t>(c)};
      line_masks_[nl] = Mask15((1u << a) | (1u << b) | (1u << c));
      ++nl;
    }

  std::array<int, 15> fill{};
  lines_through_ = {};
  for (int l = 0; l < kLines; ++l)
    for (std::uint8_t p : lines_[l])
      lines_through_[p][fill[p]++] = static_cast<std::uint8_t>(l);

  // grids: duads crossing a {3|3} split; splits keyed by the side holding 1
  int ng = 0;
  for (std::uint8_t a = 2; a <= 6; ++a)
    for (std::uint8_t b = static_cast<std::uint8_t>(a + 1); b <= 6; ++b) {
      unsigned side = (1u << 1) | (1u << a) | (1u << b);
      Mask15 g = 0;
      for (int p = 0; p < kPoints; ++p) {
        bool in_lo = (side >> duads_[p].lo) & 1;
        bool in_hi = (side >> duads_[p].hi) & 1;
        if (in_lo != in_hi) g |= Mask15(1u << p);
      }
      grids_[ng++] = g;
    }
}

int GqGeometry::duad_index(Duad d) const {
  for (int p = 0; p < kPoints; ++p)
    if (duads_[p] == d) return p;
  throw std::invalid_argument("not a duad");
}

QuadLabel GqGeometry::classify_subset(Mask15 s) const {
  switch (popcount(s)) {
    case 0:
      return QuadLabel::kEmpty;
    case 1:
      return QuadLabel::kSinglePoint;
    case 15:
      return QuadLabel::kFull;
    case 9:
      for (Mask15 g : grids_)
        if (s == g) return QuadLabel::kGrid;
      return QuadLabel::kOther;
    case 7:
      for (int p = 0; p < kPoints; ++p)
        if (s == perp(p)) return QuadLabel::kPerp;
      return QuadLabel::kOther;
    case 5: {
      Mask15 l1 = 0, l2 = 0;
      int inner = 0;
      for (Mask15 m : line_masks_)
        if ((s & m) == m) {
          (inner == 0 ? l1 : l2) = m;
          ++inner;
        }
      if (inner == 2 && popcount(Mask15(l1 & l2)) == 1 && (l1 | l2) == s) {
        for (Mask15 g : grids_)
          if ((g & s) == s) return QuadLabel::kGPerp;
      }
      if (inner == 0) {
        bool clique_free = true;
        for (int p = 0; p < kPoints && clique_free; ++p)
          if ((s >> p) & 1) clique_free = (neighbors(p) & s) == 0;
        if (clique_free) return QuadLabel::kOvoid;
      }
      return QuadLabel::kOther;
    }
    case 3: {
      for (Mask15 m : line_masks_)
        if (s == m) return QuadLabel::kLine;
      for (int p = 0; p < kPoints; ++p)
        if (((s >> p) & 1) && (neighbors(p) & s)) return QuadLabel::kOther;
      int centers = popcount(triad_centers(s));
      if (centers == 1) return QuadLabel::kUniTriad;
      if (centers == 3) return QuadLabel::kTriTriad;
      return QuadLabel::kOther;
    }
    default:
      return QuadLabel::kOther;
  }
}

Mask15 GqGeometry::triad_centers(Mask15 s) const {
  if (popcount(s) != 3) throw std::invalid_argument("triad must have 3 points");
  for (int p = 0; p < kPoints; ++p)
    if (((s >> p) & 1) && (neighbors(p) & s))
      throw std::invalid_argument("triad points must be pairwise non-collinear");
  Mask15 centers = 0;
  for (int p = 0; p < kPoints; ++p)
    if ((neighbors(p) & s) == s) centers |= Mask15(1u << p);
  return centers;
}

NearHexagon::NearHexagon() {
  int nl = 0;
  for (int q = 0; q < 15; ++q) {
    lines_[nl] = {static_cast<std::uint8_t>(q), static_cast<std::uint8_t>(15 + q),
                  static_cast<std::uint8_t>(30 + q)};
    ++nl;
  }
  for (int layer = 0; layer < 3; ++layer)
    for (int l = 0; l < GqGeometry::kLines; ++l) {
      const auto& gl = gq_.line(l);
      lines_[nl] = {static_cast<std::uint8_t>(15 * layer + gl[0]),
                    static_cast<std::uint8_t>(15 * layer + gl[1]),
                    static_cast<std::uint8_t>(15 * layer + gl[2])};
      ++nl;
    }

  for (int l = 0; l < kLines; ++l) {
    Mask45 m = 0;
    for (std::uint8_t p : lines_[l]) m |= Mask45{1} << p;
    line_masks_[l] = m;
  }

  std::array<int, 45> fill{};
  lines_through_ = {};
  for (int l = 0; l < kLines; ++l)
    for (std::uint8_t p : lines_[l])
      lines_through_[p][fill[p]++] = static_cast<std::uint8_t>(l);
}

bool NearHexagon::is_geometric_hyperplane(Mask45 s) const {
  if (s & ~kFull45) throw std::invalid_argument("point set wider than 45 bits");
  if (s == kFull45) return false;
  for (Mask45 m : line_masks_) {
    int hit = popcount(s & m);
    if (hit != 1 && hit != 3) return false;
  }
  return true;
}

int NearHexagon::lines_contained(Mask45 s) const {
  int n = 0;
  for (Mask45 m : line_masks_)
    if ((s & m) == m) ++n;
  return n;
}

int NearHexagon::point_order(Mask45 core, int p) const {
  if (!has_bit(core, p)) throw std::invalid_argument("point not in core");
  int n = 0;
  for (std::uint8_t l : lines_through_[p])
    if ((core & line_masks_[l]) == line_masks_[l]) ++n;
  return n;
}

}  // namespace nearhex
