#include "nearhex/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nearhex {

namespace {

template <std::size_t N>
std::array<std::uint8_t, N> perm_from_partition(const std::vector<int>& part) {
  std::array<std::uint8_t, N> p{};
  std::size_t pos = 0;
  for (int sz : part) {
    for (int t = 0; t < sz; ++t)
      p[pos + t] = static_cast<std::uint8_t>(pos + (t + 1) % sz);
    pos += sz;
  }
  if (pos != N) throw std::invalid_argument("partition size mismatch");
  return p;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int class_size(const std::vector<int>& part, int n) {
  // n! / prod over distinct cycle lengths k: k^m * m!
  long denom = 1;
  for (std::size_t i = 0; i < part.size();) {
    std::size_t j = i;
    while (j < part.size() && part[j] == part[i]) ++j;
    int m = static_cast<int>(j - i);
    for (int t = 0; t < m; ++t) denom *= part[i];
    denom *= factorial(m);
    i = j;
  }
  return static_cast<int>(factorial(n) / denom);
}

template <std::size_t N>
std::string cycle_string(const std::array<std::uint8_t, N>& p, int offset) {
  std::string out;
  std::array<bool, N> seen{};
  for (std::size_t s = 0; s < N; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += '(';
    std::size_t i = s;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(static_cast<int>(i) + offset);
      first = false;
      i = p[i];
    }
    out += ')';
  }
  return out;
}

const std::vector<std::vector<int>>& s6_partitions() {
  // Table-2 row order
  static const std::vector<std::vector<int>> parts = {
      {1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {2, 2, 2},
      {3, 1, 1, 1},       {3, 3},          {4, 1, 1},    {4, 2},
      {3, 2, 1},          {5, 1},          {6}};
  return parts;
}

const std::vector<std::vector<int>>& s3_partitions() {
  static const std::vector<std::vector<int>> parts = {{1, 1, 1}, {2, 1}, {3}};
  return parts;
}

}  // namespace

AutomorphismGroup::AutomorphismGroup(const NearHexagon& nh) : nh_(&nh) {
  elements_.reserve(kOrder);
  Perm6 s6;
  std::iota(s6.begin(), s6.end(), std::uint8_t{0});
  do {
    Perm3 s3;
    std::iota(s3.begin(), s3.end(), std::uint8_t{0});
    do {
      elements_.push_back(element(s6, s3));
    } while (std::next_permutation(s3.begin(), s3.end()));
  } while (std::next_permutation(s6.begin(), s6.end()));

  for (const auto& p3 : s3_partitions()) {
    Perm3 r3 = perm_from_partition<3>(p3);
    int sz3 = class_size(p3, 3);
    for (const auto& p6 : s6_partitions()) {
      Perm6 r6 = perm_from_partition<6>(p6);
      ConjClass c;
      c.cycle6 = p6;
      c.cycle3 = p3;
      c.rep = element(r6, r3);
      c.size = class_size(p6, 6) * sz3;
      c.name = cycle_string(r6, 1) + cycle_string(r3, 7);
      if (c.name.empty()) c.name = "id";
      classes_.push_back(std::move(c));
    }
  }

  for (const auto& p6 : s6_partitions()) {
    S6Class c;
    c.cycle = p6;
    c.rep = perm_from_partition<6>(p6);
    c.size = class_size(p6, 6);
    c.name = cycle_string(c.rep, 1);
    if (c.name.empty()) c.name = "id";
    s6_classes_.push_back(std::move(c));
  }

  Perm6 id6;
  std::iota(id6.begin(), id6.end(), std::uint8_t{0});
  Perm3 id3{0, 1, 2};
  generators_ = {element(Perm6{1, 0, 2, 3, 4, 5}, id3),
                 element(Perm6{1, 2, 3, 4, 5, 0}, id3),
                 element(id6, Perm3{1, 0, 2}),
                 element(id6, Perm3{1, 2, 0})};
}

GroupElement AutomorphismGroup::element(const Perm6& s6, const Perm3& s3) const {
  const GqGeometry& gq = nh_->gq();
  GroupElement g;
  g.sigma6 = s6;
  g.sigma3 = s3;
  for (int p = 0; p < NearHexagon::kPoints; ++p) {
    int layer = NearHexagon::layer_of(p);
    Duad d = gq.duad(NearHexagon::gq_of(p));
    std::uint8_t a = static_cast<std::uint8_t>(s6[d.lo - 1] + 1);
    std::uint8_t b = static_cast<std::uint8_t>(s6[d.hi - 1] + 1);
    if (a > b) std::swap(a, b);
    g.point[p] = static_cast<std::uint8_t>(
        NearHexagon::point_id(s3[layer], gq.duad_index(Duad{a, b})));
  }
  return g;
}

GroupElement AutomorphismGroup::compose(const GroupElement& a,
                                        const GroupElement& b) {
  GroupElement g;
  for (int i = 0; i < 6; ++i) g.sigma6[i] = a.sigma6[b.sigma6[i]];
  for (int i = 0; i < 3; ++i) g.sigma3[i] = a.sigma3[b.sigma3[i]];
  for (int p = 0; p < NearHexagon::kPoints; ++p) g.point[p] = a.point[b.point[p]];
  return g;
}

std::array<std::uint16_t, 1024> hyperplane_action(const VeldkampSpace& vs,
                                                  const GroupElement& g) {
  std::array<std::uint16_t, 10> basis_img{};
  for (int j = 0; j < 10; ++j) {
    Mask45 src = vs.point_set(static_cast<HypId>(1u << j));
    Mask45 dst = 0;
    for (int p = 0; p < NearHexagon::kPoints; ++p)
      if (has_bit(src, p)) dst |= Mask45{1} << g.point[p];
    basis_img[j] = vs.id_of(dst);
  }
  std::array<std::uint16_t, 1024> img{};
  for (unsigned x = 1; x < 1024; ++x) {
    unsigned lsb = x & (~x + 1);
    img[x] = img[x ^ lsb] ^ basis_img[std::countr_zero(lsb)];
  }
  return img;
}

std::array<std::uint8_t, 32> gq_action(const VeldkampSpace& vs, const Perm6& s6) {
  const GqGeometry& gq = vs.hexagon().gq();
  std::array<std::uint8_t, 5> basis_img{};
  for (int j = 0; j < 5; ++j) {
    Mask15 src = vs.gq_point_set(static_cast<std::uint8_t>(1u << j));
    Mask15 dst = 0;
    for (int p = 0; p < GqGeometry::kPoints; ++p)
      if ((src >> p) & 1) {
        Duad d = gq.duad(p);
        std::uint8_t a = static_cast<std::uint8_t>(s6[d.lo - 1] + 1);
        std::uint8_t b = static_cast<std::uint8_t>(s6[d.hi - 1] + 1);
        if (a > b) std::swap(a, b);
        dst |= Mask15(1u << gq.duad_index(Duad{a, b}));
      }
    basis_img[j] = vs.gq_coord(dst);
  }
  std::array<std::uint8_t, 32> img{};
  for (unsigned x = 1; x < 32; ++x) {
    unsigned lsb = x & (~x + 1);
    img[x] = static_cast<std::uint8_t>(img[x ^ lsb] ^
                                       basis_img[std::countr_zero(lsb)]);
  }
  return img;
}

VLine act_on_line(const std::array<std::uint16_t, 1024>& act, VLine l) {
  std::array<std::uint16_t, 3> m = {act[l.a], act[l.b], act[l.c]};
  std::sort(m.begin(), m.end());
  return VLine{m[0], m[1], m[2]};
}

long stabilizer_order(const VeldkampSpace& vs, const AutomorphismGroup& grp,
                      HypId h) {
  std::array<std::array<std::uint16_t, 1024>, 4> gens;
  for (int i = 0; i < 4; ++i)
    gens[i] = hyperplane_action(vs, grp.generators()[i]);
  std::vector<bool> seen(1024, false);
  std::vector<HypId> stack = {h};
  seen[h] = true;
  long orbit = 0;
  while (!stack.empty()) {
    HypId x = stack.back();
    stack.pop_back();
    ++orbit;
    for (const auto& t : gens) {
      HypId y = t[x];
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return AutomorphismGroup::kOrder / orbit;
}

}  // namespace nearhex
