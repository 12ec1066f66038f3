#include "nearhex/veldkamp.hpp"

#include <algorithm>
#include <stdexcept>

namespace nearhex {

const char* to_token(HypType t) {
  static const char* names[] = {"?", "H1", "H2", "H3", "H4",
                                "H5", "H6", "H7", "H8"};
  return names[type_index(t)];
}

bool is_valid_partition(SetPartition p) {
  return (p.side & 1) && p.side != 0x3f && (p.side & ~0x3fu) == 0;
}

std::optional<SetPartition> partition_sum(SetPartition a, SetPartition b) {
  if (!is_valid_partition(a) || !is_valid_partition(b))
    throw std::invalid_argument("invalid set partition");
  if (a == b) return std::nullopt;  // ZeroSum: the trivial partition
  unsigned A = a.side, B = ~A & 0x3fu, C = b.side, D = ~C & 0x3fu;
  unsigned s1 = (A & C) | (B & D);
  unsigned s2 = (A & D) | (B & C);
  SetPartition r{static_cast<std::uint8_t>((s1 & 1) ? s1 : s2)};
  return r;
}

Quadruple canonical_quadruple(Quadruple q) {
  const std::uint8_t m = q.part[0];
  for (auto& d : q.part) d = static_cast<std::uint8_t>(d ^ m);
  return q;
}

namespace {

// multiset of nonzero part sizes -> type
HypType shape_type(const Quadruple& q) {
  std::array<int, 4> n{};
  for (auto d : q.part) ++n[d];
  std::array<int, 4> s = n;
  std::sort(s.begin(), s.end(), std::greater<>());
  int code = s[0] * 1000 + s[1] * 100 + s[2] * 10 + s[3];
  switch (code) {
    case 3300: return HypType::kH1;
    case 4200: return HypType::kH2;
    case 5100: return HypType::kH3;
    case 2211: return HypType::kH4;
    case 2220: return HypType::kH5;
    case 3111: return HypType::kH6;
    case 3210: return HypType::kH7;
    case 4110: return HypType::kH8;
    default: throw std::logic_error("impossible quadruple shape");
  }
}

}  // namespace

VeldkampSpace::VeldkampSpace(const NearHexagon& nh) : nh_(&nh) {
  const GqGeometry& gq = nh.gq();

  for (int i = 1; i <= 6; ++i) {
    Mask15 m = 0;
    for (int p = 0; p < GqGeometry::kPoints; ++p) {
      Duad d = gq.duad(p);
      if (d.lo == i || d.hi == i) m |= Mask15(1u << p);
    }
    ovoids_[i] = m;
  }

  // complements compose additively: comp(S1 (+) S2) = comp(S1) ^ comp(S2)
  coord_of_comp_.fill(-1);
  for (unsigned c = 0; c < 32; ++c) {
    Mask15 comp = 0;
    for (int i = 0; i < 5; ++i)
      if ((c >> i) & 1) comp ^= Mask15(kFull15 ^ ovoids_[i + 1]);
    gq_sets_[c] = Mask15(kFull15 ^ comp);
    if (coord_of_comp_[comp] >= 0) throw std::logic_error("ovoid span collapsed");
    coord_of_comp_[comp] = static_cast<std::int8_t>(c);
  }

  // subset of {1..6} (bit k = element k+1) -> coordinate of sum of its ovoids
  for (unsigned s = 0; s < 64; ++s) {
    unsigned v = 0;
    for (int i = 0; i < 6; ++i)
      if ((s >> i) & 1) v ^= (i < 5) ? (1u << i) : 31u;
    vec_of_subset_[s] = static_cast<std::uint8_t>(v);
  }
  subset_of_vec_.fill(0);
  for (unsigned s = 0; s < 64; ++s)
    if (s & 1) subset_of_vec_[vec_of_subset_[s]] = static_cast<std::uint8_t>(s);

  point_sets_.resize(1024);
  types_.resize(1024, 0);
  for (unsigned h = 0; h < 1024; ++h) {
    unsigned c1 = h & 31, c0 = (h >> 5) & 31;
    point_sets_[h] = Mask45(gq_sets_[c0]) | Mask45(gq_sets_[c1]) << 15 |
                     Mask45(gq_sets_[c0 ^ c1]) << 30;
    if (h) types_[h] = static_cast<std::uint8_t>(shape_type(quadruple_of(
        static_cast<HypId>(h))));
  }

  lines_.reserve(kLineCount);
  line_idx_.assign(1 << 20, -1);
  for (unsigned a = 1; a < 1024; ++a)
    for (unsigned b = a + 1; b < 1024; ++b) {
      unsigned c = a ^ b;
      if (c < b) continue;
      line_idx_[(a << 10) | b] = static_cast<std::int32_t>(lines_.size());
      lines_.push_back(VLine{static_cast<HypId>(a), static_cast<HypId>(b),
                             static_cast<HypId>(c)});
    }

  gq_vlines_.reserve(155);
  for (unsigned a = 1; a < 32; ++a)
    for (unsigned b = a + 1; b < 32; ++b)
      if ((a ^ b) > b)
        gq_vlines_.push_back({static_cast<std::uint8_t>(a),
                              static_cast<std::uint8_t>(b),
                              static_cast<std::uint8_t>(a ^ b)});
}

Mask15 VeldkampSpace::ovoid(int i) const {
  if (i < 1 || i > 6) throw std::invalid_argument("ovoid index in 1..6");
  return ovoids_[i];
}

std::uint8_t VeldkampSpace::gq_coord(Mask15 set) const {
  if (set & ~kFull15) throw std::invalid_argument("point set wider than 15 bits");
  std::int8_t c = coord_of_comp_[kFull15 ^ set];
  if (c < 0) throw std::invalid_argument("not a GQ(2,2) hyperplane or full quad");
  return static_cast<std::uint8_t>(c);
}

SetPartition VeldkampSpace::partition_of(std::uint8_t coord) const {
  if (coord == 0 || coord >= 32)
    throw std::invalid_argument("partition of the zero vector");
  return SetPartition{subset_of_vec_[coord]};
}

std::uint8_t VeldkampSpace::coord_of_partition(SetPartition p) const {
  if (!is_valid_partition(p)) throw std::invalid_argument("invalid set partition");
  return vec_of_subset_[p.side];
}

HypId VeldkampSpace::id_of(Mask45 set) const {
  if (set & ~kFull45) throw std::invalid_argument("point set wider than 45 bits");
  std::uint8_t c0 = gq_coord(Mask15(set & kFull15));
  std::uint8_t c1 = gq_coord(Mask15((set >> 15) & kFull15));
  std::uint8_t c2 = gq_coord(Mask15((set >> 30) & kFull15));
  if (c2 != (c0 ^ c1)) throw std::invalid_argument("layers do not sum to zero");
  HypId h = static_cast<HypId>(c1 | (c0 << 5));
  if (point_sets_[h] != set) throw std::logic_error("id_of mismatch");
  return h;
}

std::optional<HypId> VeldkampSpace::sum(HypId a, HypId b) const {
  if (a == 0 || a > 1023 || b == 0 || b > 1023)
    throw std::invalid_argument("hyperplane id in 1..1023");
  if (a == b) return std::nullopt;  // ZeroSum
  return static_cast<HypId>(a ^ b);
}

Quadruple VeldkampSpace::quadruple_of(HypId h) const {
  if (h == 0 || h > 1023) throw std::invalid_argument("hyperplane id in 1..1023");
  unsigned c1 = h & 31, c0 = (h >> 5) & 31;
  unsigned s0 = subset_of_vec_[c0];  // side of {AuB | CuD} containing 1
  unsigned s1 = subset_of_vec_[c1];  // side of {AuC | BuD} containing 1
  Quadruple q;
  for (int e = 0; e < 6; ++e) {
    unsigned in0 = (s0 >> e) & 1, in1 = (s1 >> e) & 1;
    q.part[e] = static_cast<std::uint8_t>(((1 - in0) << 1) | (1 - in1));
  }
  // element 1 lies in both canonical sides, so part[0] == 0 already
  return q;
}

HypId VeldkampSpace::id_of_quadruple(const Quadruple& q) const {
  std::array<int, 4> n{};
  for (auto d : q.part) {
    if (d > 3) throw std::invalid_argument("quadruple part out of range");
    ++n[d];
  }
  int nonempty = 0;
  for (int c : n)
    if (c) ++nonempty;
  if (nonempty < 2)
    throw std::invalid_argument("quadruple needs at least two nonempty parts");
  unsigned mask_ab = 0, mask_ac = 0, mask_ad = 0;
  for (int e = 0; e < 6; ++e) {
    if (q.part[e] <= 1) mask_ab |= 1u << e;
    if (q.part[e] == 0 || q.part[e] == 2) mask_ac |= 1u << e;
    if (q.part[e] == 0 || q.part[e] == 3) mask_ad |= 1u << e;
  }
  unsigned c0 = vec_of_subset_[mask_ab];
  unsigned c1 = vec_of_subset_[mask_ac];
  if (vec_of_subset_[mask_ad] != (c0 ^ c1))
    throw std::logic_error("layer coordinates inconsistent");
  return static_cast<HypId>(c1 | (c0 << 5));
}

int VeldkampSpace::line_index(HypId a, HypId b) const {
  if (a == b || a == 0 || b == 0 || a > 1023 || b > 1023)
    throw std::invalid_argument("need two distinct hyperplane ids in 1..1023");
  unsigned c = a ^ b;
  unsigned lo = std::min({static_cast<unsigned>(a), static_cast<unsigned>(b), c});
  unsigned hi = std::max({static_cast<unsigned>(a), static_cast<unsigned>(b), c});
  unsigned mid = a ^ b ^ c ^ lo ^ hi;
  return line_idx_[(lo << 10) | mid];
}

}  // namespace nearhex
