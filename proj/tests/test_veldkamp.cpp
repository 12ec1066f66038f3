#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nearhex/veldkamp.hpp"

using namespace nearhex;

namespace {

struct Fix {
  NearHexagon nh;
  VeldkampSpace vs;
  Fix() : vs(nh) {}
};

Fix& fix() {
  static Fix f;
  return f;
}

}  // namespace

TEST_CASE("ovoid basis") {
  auto& [nh, vs] = fix();
  const GqGeometry& gq = nh.gq();

  Mask15 e1 = vs.ovoid(1);
  for (Duad d : {Duad{1, 2}, Duad{1, 3}, Duad{1, 4}, Duad{1, 5}, Duad{1, 6}})
    CHECK(((e1 >> gq.duad_index(d)) & 1) == 1);
  CHECK(popcount(e1) == 5);

  // sum over all six ovoids is the zero element (the full quad)
  Mask15 acc_comp = 0;
  for (int i = 1; i <= 6; ++i) acc_comp ^= Mask15(kFull15 ^ vs.ovoid(i));
  CHECK(acc_comp == 0);

  // rank 5: the 32 spans of e1..e5 are distinct, and e6 is their full sum
  std::set<Mask15> spans;
  for (unsigned c = 0; c < 32; ++c) spans.insert(vs.gq_point_set(c));
  CHECK(spans.size() == 32);
  CHECK(vs.ovoid(6) == vs.gq_point_set(31));

  // all 10 basis hyperplanes pass the predicate; b_k has a deep layer
  for (int k = 0; k < 10; ++k) {
    Mask45 ps = vs.point_set(static_cast<HypId>(1u << k));
    CHECK(nh.is_geometric_hyperplane(ps));
    int deep_layer = k < 5 ? 0 : 1;
    CHECK(Mask15((ps >> (15 * deep_layer)) & kFull15) == kFull15);
  }
}

TEST_CASE("veldkamp sums at GQ level") {
  auto& [nh, vs] = fix();
  const GqGeometry& gq = nh.gq();

  // e1 (+) e2 is the perp-set of {1,2}
  std::uint8_t c1 = vs.gq_coord(vs.ovoid(1));
  std::uint8_t c2 = vs.gq_coord(vs.ovoid(2));
  CHECK(vs.gq_point_set(c1 ^ c2) == gq.perp(gq.duad_index(Duad{1, 2})));

  // e1 (+) e2 (+) e3 is the grid of duads crossing {1,2,3}|{4,5,6}
  std::uint8_t c3 = vs.gq_coord(vs.ovoid(3));
  Mask15 grid = 0;
  for (int p = 0; p < GqGeometry::kPoints; ++p) {
    Duad d = gq.duad(p);
    if ((d.lo <= 3) != (d.hi <= 3)) grid |= Mask15(1u << p);
  }
  CHECK(vs.gq_point_set(c1 ^ c2 ^ c3) == grid);
  CHECK(gq.classify_subset(grid) == QuadLabel::kGrid);
}

TEST_CASE("hyperplane sum and coordinate consistency") {
  auto& [nh, vs] = fix();
  CHECK(!vs.sum(7, 7).has_value());
  CHECK(vs.sum(7, 9).value() == (7 ^ 9));

  // exhaustive: points(a^b) is the complement of the symmetric difference
  for (unsigned a = 1; a < 1024; ++a)
    for (unsigned b = a + 1; b < 1024; ++b) {
      Mask45 expect = kFull45 & ~(vs.point_set(static_cast<HypId>(a)) ^
                                  vs.point_set(static_cast<HypId>(b)));
      if (vs.point_set(static_cast<HypId>(a ^ b)) != expect) {
        REQUIRE(false);
      }
    }

  // id_of inverts point_set
  for (unsigned h = 1; h < 1024; ++h)
    CHECK(vs.id_of(vs.point_set(static_cast<HypId>(h))) == h);
  CHECK(vs.id_of(kFull45) == 0);
}

TEST_CASE("set partitions") {
  auto& [nh, vs] = fix();

  // {1|23456} + {2|13456} = {12|3456}
  SetPartition p1{0b000001};
  SetPartition p2{static_cast<std::uint8_t>(~0b000010u & 0x3f)};
  auto s = partition_sum(p1, p2);
  REQUIRE(s.has_value());
  CHECK(s->side == 0b000011);

  CHECK(!partition_sum(p1, p1).has_value());
  CHECK_THROWS_AS((void)partition_sum(SetPartition{0x3f}, p1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)partition_sum(SetPartition{0x02}, p1),
                  std::invalid_argument);

  // shapes: (5,1)+(5,1) -> (4,2); and the perp/ovoid/grid coord shapes
  int small = std::min(popcount(Mask45(s->side)), 6 - popcount(Mask45(s->side)));
  CHECK(small == 2);

  // 31 partitions <-> 31 nonzero coords, both directions
  std::set<std::uint8_t> sides;
  for (unsigned c = 1; c < 32; ++c) {
    SetPartition p = vs.partition_of(static_cast<std::uint8_t>(c));
    CHECK(is_valid_partition(p));
    CHECK(vs.coord_of_partition(p) == c);
    sides.insert(p.side);
  }
  CHECK(sides.size() == 31);

  // partition shape matches the hyperplane species
  for (unsigned c = 1; c < 32; ++c) {
    SetPartition p = vs.partition_of(static_cast<std::uint8_t>(c));
    int k = std::min(popcount(Mask45(p.side)), 6 - popcount(Mask45(p.side)));
    QuadLabel lab = nh.gq().classify_subset(vs.gq_point_set(c));
    if (k == 1) CHECK(lab == QuadLabel::kOvoid);
    if (k == 2) CHECK(lab == QuadLabel::kPerp);
    if (k == 3) CHECK(lab == QuadLabel::kGrid);
  }
}

TEST_CASE("quadruple encoding") {
  auto& [nh, vs] = fix();

  // every one of the 4^6 assignments with at least two nonempty parts maps
  // to a hyperplane; the map is four-to-one and round-trips canonically
  std::array<int, 1024> hits{};
  int valid = 0;
  for (unsigned code = 0; code < 4096; ++code) {
    Quadruple q;
    unsigned c = code;
    for (int i = 0; i < 6; ++i, c >>= 2)
      q.part[i] = static_cast<std::uint8_t>(c & 3);
    std::array<int, 4> n{};
    for (auto d : q.part) ++n[d];
    int nonempty = 0;
    for (int x : n)
      if (x) ++nonempty;
    if (nonempty < 2) {
      CHECK_THROWS_AS((void)vs.id_of_quadruple(q), std::invalid_argument);
      continue;
    }
    ++valid;
    HypId h = vs.id_of_quadruple(q);
    ++hits[h];
    CHECK(vs.quadruple_of(h) == canonical_quadruple(q));
  }
  CHECK(valid == 4092);
  for (unsigned h = 1; h < 1024; ++h) CHECK(hits[h] == 4);

  // Klein-group images share the hyperplane: (A,B,C,D) ~ (B,A,D,C)
  Quadruple q{{0, 0, 1, 1, 2, 3}};
  Quadruple swapped{{1, 1, 0, 0, 3, 2}};
  CHECK(vs.id_of_quadruple(q) == vs.id_of_quadruple(swapped));

  // C = D = empty: layer 0 deep, layers 1 and 2 identical
  Quadruple half{{0, 0, 0, 1, 1, 1}};
  Mask45 ps = vs.point_set(vs.id_of_quadruple(half));
  CHECK(Mask15(ps & kFull15) == kFull15);
  CHECK(Mask15((ps >> 15) & kFull15) == Mask15((ps >> 30) & kFull15));
  CHECK(vs.type(vs.id_of_quadruple(half)) == HypType::kH1);
}

TEST_CASE("hyperplane type census") {
  auto& [nh, vs] = fix();
  std::array<int, 9> count{};
  for (unsigned h = 1; h < 1024; ++h) ++count[type_index(vs.type(static_cast<HypId>(h)))];
  CHECK(count[1] == 30);
  CHECK(count[2] == 45);
  CHECK(count[3] == 18);
  CHECK(count[4] == 270);
  CHECK(count[5] == 90);
  CHECK(count[6] == 120);
  CHECK(count[7] == 360);
  CHECK(count[8] == 90);
  CHECK(count[1] + count[2] + count[3] + count[4] + count[5] + count[6] +
            count[7] + count[8] ==
        1023);
}

TEST_CASE("hyperplane enumeration is the span") {
  auto& [nh, vs] = fix();
  int pass = 0;
  for (unsigned h = 1; h < 1024; ++h) {
    Mask45 ps = vs.point_set(static_cast<HypId>(h));
    if (nh.is_geometric_hyperplane(ps)) ++pass;
    // layer closure: each layer is full or a GQ hyperplane, and any two
    // layers sum to the third
    std::uint8_t c0 = vs.gq_coord(Mask15(ps & kFull15));
    std::uint8_t c1 = vs.gq_coord(Mask15((ps >> 15) & kFull15));
    std::uint8_t c2 = vs.gq_coord(Mask15((ps >> 30) & kFull15));
    CHECK((c0 ^ c1) == c2);
  }
  CHECK(pass == 1023);
}

TEST_CASE("veldkamp lines") {
  auto& [nh, vs] = fix();
  CHECK(vs.lines().size() == 174251);
  CHECK(vs.gq_lines().size() == 155);

  // closure, canonical ordering, and member-independent lookup
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 174250);
  for (int i = 0; i < 20000; ++i) {
    int idx = pick(rng);
    const VLine& l = vs.lines()[idx];
    CHECK(l.a < l.b);
    CHECK(l.b < l.c);
    CHECK((l.a ^ l.b) == l.c);
    CHECK(vs.line_index(l.a, l.b) == idx);
    CHECK(vs.line_index(l.c, l.a) == idx);
    CHECK(vs.line_index(l.b, l.c) == idx);
  }

  // the three pairwise intersections coincide (checked exhaustively)
  for (const VLine& l : vs.lines()) {
    Mask45 ab = vs.point_set(l.a) & vs.point_set(l.b);
    if ((ab & vs.point_set(l.c)) != ab) {
      REQUIRE(false);
    }
  }
}
