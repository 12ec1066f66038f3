#include <doctest.h>

#include <algorithm>
#include <array>
#include <queue>
#include <vector>

#include "nearhex/geometry.hpp"

using namespace nearhex;

namespace {

// independent distance oracle on the collinearity graph
std::array<std::array<int, 45>, 45> all_distances(const NearHexagon& nh) {
  std::array<std::array<int, 45>, 45> dist{};
  for (auto& row : dist) row.fill(-1);
  std::vector<std::vector<int>> adj(45);
  for (int l = 0; l < NearHexagon::kLines; ++l) {
    const auto& pts = nh.line(l);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) adj[pts[i]].push_back(pts[j]);
  }
  for (int s = 0; s < 45; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          q.push(y);
        }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("duad model of GQ(2,2)") {
  GqGeometry gq;
  CHECK(gq.duad(0) == Duad{1, 2});
  CHECK(gq.duad(1) == Duad{1, 3});
  CHECK(gq.duad(14) == Duad{5, 6});
  CHECK(gq.duad_index(Duad{1, 2}) == 0);
  CHECK(gq.duad_index(Duad{5, 6}) == 14);

  // every line partitions {1..6} into three disjoint duads
  for (int l = 0; l < GqGeometry::kLines; ++l) {
    unsigned used = 0;
    for (std::uint8_t p : gq.line(l)) {
      Duad d = gq.duad(p);
      CHECK((used & (1u << d.lo)) == 0);
      CHECK((used & (1u << d.hi)) == 0);
      used |= (1u << d.lo) | (1u << d.hi);
    }
    CHECK(used == 0x7eu);
  }
  for (int p = 0; p < GqGeometry::kPoints; ++p)
    CHECK(gq.lines_through(p).size() == 3);

  // {1,2},{3,4},{5,6} collinear triple; {1,2},{1,3} non-collinear
  int a = gq.duad_index(Duad{1, 2});
  int b = gq.duad_index(Duad{3, 4});
  int c = gq.duad_index(Duad{5, 6});
  CHECK(gq.collinear(a, b));
  CHECK(gq.collinear(b, c));
  bool found = false;
  Mask15 m = Mask15((1u << a) | (1u << b) | (1u << c));
  for (int l = 0; l < GqGeometry::kLines; ++l) found |= (gq.line_mask(l) == m);
  CHECK(found);
  CHECK(!gq.collinear(a, gq.duad_index(Duad{1, 3})));
  CHECK(!gq.collinear(a, a));
}

TEST_CASE("near hexagon structure") {
  NearHexagon nh;
  for (int p = 0; p < NearHexagon::kPoints; ++p) {
    const auto& through = nh.lines_through(p);
    CHECK(through.size() == 4);
    int type_one = 0;
    for (std::uint8_t l : through)
      if (nh.line_kind(l) == LineKind::kTypeOne) ++type_one;
    CHECK(type_one == 1);
  }

  // two distinct lines share at most one point
  for (int l1 = 0; l1 < NearHexagon::kLines; ++l1)
    for (int l2 = l1 + 1; l2 < NearHexagon::kLines; ++l2)
      CHECK(popcount(nh.line_mask(l1) & nh.line_mask(l2)) <= 1);

  auto dist = all_distances(nh);
  int diameter = 0;
  for (int x = 0; x < 45; ++x)
    for (int y = 0; y < 45; ++y) {
      CHECK(dist[x][y] >= 0);
      diameter = std::max(diameter, dist[x][y]);
    }
  CHECK(diameter == 3);

  // near-polygon axiom: a unique nearest point on every line
  for (int x = 0; x < 45; ++x)
    for (int l = 0; l < NearHexagon::kLines; ++l) {
      int best = 4, nbest = 0;
      for (std::uint8_t p : nh.line(l)) {
        if (dist[x][p] < best) {
          best = dist[x][p];
          nbest = 1;
        } else if (dist[x][p] == best) {
          ++nbest;
        }
      }
      CHECK(nbest == 1);
    }
}

TEST_CASE("geometric hyperplane predicate") {
  NearHexagon nh;
  CHECK(!nh.is_geometric_hyperplane(kFull45));
  CHECK_THROWS_AS((void)nh.is_geometric_hyperplane(Mask45{1} << 45),
                  std::invalid_argument);

  // singular hyperplanes: points at distance <= 2 from x
  auto dist = all_distances(nh);
  for (int x = 0; x < 45; ++x) {
    Mask45 h = 0;
    for (int y = 0; y < 45; ++y)
      if (dist[x][y] <= 2) h |= Mask45{1} << y;
    CHECK(nh.is_geometric_hyperplane(h));
  }

  // a bare line misses disjoint lines entirely
  CHECK(!nh.is_geometric_hyperplane(nh.line_mask(0)));
}

TEST_CASE("quad subset classification") {
  GqGeometry gq;

  Mask15 e1 = 0;
  for (int p = 0; p < GqGeometry::kPoints; ++p) {
    Duad d = gq.duad(p);
    if (d.lo == 1 || d.hi == 1) e1 |= Mask15(1u << p);
  }
  CHECK(popcount(e1) == 5);
  CHECK(gq.classify_subset(e1) == QuadLabel::kOvoid);

  int p12 = gq.duad_index(Duad{1, 2});
  CHECK(popcount(gq.perp(p12)) == 7);
  CHECK(gq.classify_subset(gq.perp(p12)) == QuadLabel::kPerp);

  CHECK(gq.classify_subset(gq.line_mask(0)) == QuadLabel::kLine);
  CHECK(gq.classify_subset(kFull15) == QuadLabel::kFull);
  CHECK(gq.classify_subset(0) == QuadLabel::kEmpty);
  CHECK(gq.classify_subset(1) == QuadLabel::kSinglePoint);
  CHECK(gq.classify_subset(3) == QuadLabel::kOther);  // a collinear-free pair

  for (Mask15 g : gq.grids()) {
    CHECK(popcount(g) == 9);
    CHECK(gq.classify_subset(g) == QuadLabel::kGrid);
  }

  // two concurrent lines form a g-perp
  int l1 = gq.lines_through(p12)[0], l2 = gq.lines_through(p12)[1];
  Mask15 gp = Mask15(gq.line_mask(l1) | gq.line_mask(l2));
  CHECK(popcount(gp) == 5);
  CHECK(gq.classify_subset(gp) == QuadLabel::kGPerp);

  // triangle-type triad {12,13,23}: tricentric; star-type {12,13,14}: unicentric
  Mask15 tri = Mask15((1u << gq.duad_index(Duad{1, 2})) |
                      (1u << gq.duad_index(Duad{1, 3})) |
                      (1u << gq.duad_index(Duad{2, 3})));
  CHECK(gq.classify_subset(tri) == QuadLabel::kTriTriad);
  Mask15 uni = Mask15((1u << gq.duad_index(Duad{1, 2})) |
                      (1u << gq.duad_index(Duad{1, 3})) |
                      (1u << gq.duad_index(Duad{1, 4})));
  CHECK(gq.classify_subset(uni) == QuadLabel::kUniTriad);
}

TEST_CASE("triad census and centers") {
  GqGeometry gq;
  int unicentric = 0, tricentric = 0;
  for (int a = 0; a < 15; ++a)
    for (int b = a + 1; b < 15; ++b)
      for (int c = b + 1; c < 15; ++c) {
        if (gq.collinear(a, b) || gq.collinear(a, c) || gq.collinear(b, c))
          continue;
        Mask15 t = Mask15((1u << a) | (1u << b) | (1u << c));
        int n = popcount(gq.triad_centers(t));
        CHECK((n == 1 || n == 3));
        if (n == 1)
          ++unicentric;
        else
          ++tricentric;
      }
  CHECK(unicentric == 60);
  CHECK(tricentric == 20);

  // collinear pair rejected
  Mask15 bad = Mask15((1u << gq.duad_index(Duad{1, 2})) |
                      (1u << gq.duad_index(Duad{3, 4})) |
                      (1u << gq.duad_index(Duad{3, 5})));
  CHECK_THROWS_AS((void)gq.triad_centers(bad), std::invalid_argument);

  // a tricentric triad sits inside an ovoid with its centers... the centers
  // of {12,13,23} are the duads of {4,5,6}
  Mask15 tri = Mask15((1u << gq.duad_index(Duad{1, 2})) |
                      (1u << gq.duad_index(Duad{1, 3})) |
                      (1u << gq.duad_index(Duad{2, 3})));
  Mask15 centers = gq.triad_centers(tri);
  CHECK(popcount(centers) == 3);
  CHECK(((centers >> gq.duad_index(Duad{4, 5})) & 1) == 1);
  CHECK(((centers >> gq.duad_index(Duad{4, 6})) & 1) == 1);
  CHECK(((centers >> gq.duad_index(Duad{5, 6})) & 1) == 1);
}

TEST_CASE("point orders") {
  NearHexagon nh;
  for (int p = 0; p < NearHexagon::kPoints; ++p)
    CHECK(nh.point_order(kFull45, p) == 4);

  Mask45 one_line = nh.line_mask(0);
  for (std::uint8_t p : nh.line(0)) CHECK(nh.point_order(one_line, p) == 1);
  CHECK_THROWS_AS((void)nh.point_order(one_line, 5), std::invalid_argument);

  // label totality over every GQ subset
  GqGeometry gq;
  for (unsigned s = 0; s < (1u << 15); s += 37) {
    QuadLabel l = gq.classify_subset(static_cast<Mask15>(s));
    CHECK(static_cast<int>(l) <= static_cast<int>(QuadLabel::kOther));
  }
}
