#include "nearhex/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nearhex/fixtures.hpp"

namespace nearhex {

FixDecomposition fix_decomposition(const std::array<std::uint16_t, 1024>& act) {
  FixDecomposition d;
  long fixed = 0, swapped = 0, cycled = 0;
  for (unsigned x = 1; x < 1024; ++x) {
    unsigned gx = act[x];
    if (gx == x) {
      ++fixed;
      continue;
    }
    if (act[gx] == x) ++swapped;
    if (act[gx] == (x ^ gx)) ++cycled;
  }
  d.fix1 = fixed * (fixed - 1) / 6;
  d.fix2 = swapped / 2;
  d.fix3 = cycled / 3;
  return d;
}

long count_setwise_fixed(const VeldkampSpace& vs,
                         const std::array<std::uint16_t, 1024>& act) {
  long n = 0;
  for (const VLine& l : vs.lines()) {
    unsigned a = act[l.a], b = act[l.b], c = act[l.c];
    unsigned lo = std::min({a, b, c}), hi = std::max({a, b, c});
    if (lo == l.a && hi == l.c && (a ^ b ^ c ^ lo ^ hi) == l.b) ++n;
  }
  return n;
}

BurnsideResult burnside_count(const VeldkampSpace& vs,
                              const AutomorphismGroup& grp,
                              GroupAction action) {
  BurnsideResult r;
  if (action == GroupAction::kGqHyperplanes || action == GroupAction::kGqLines) {
    r.group_order = 720;
    for (const auto& cls : grp.s6_classes()) {
      auto act = gq_action(vs, cls.rep);
      long fixed = 0;
      if (action == GroupAction::kGqHyperplanes) {
        for (unsigned x = 1; x < 32; ++x)
          if (act[x] == x) ++fixed;
      } else {
        for (const auto& l : vs.gq_lines()) {
          unsigned a = act[l[0]], b = act[l[1]], c = act[l[2]];
          unsigned lo = std::min({a, b, c}), hi = std::max({a, b, c});
          if (lo == l[0] && hi == l[2] && (a ^ b ^ c ^ lo ^ hi) == l[1]) ++fixed;
        }
      }
      r.weighted_sum += cls.size * fixed;
    }
  } else {
    r.group_order = AutomorphismGroup::kOrder;
    for (const auto& cls : grp.classes()) {
      auto act = hyperplane_action(vs, cls.rep);
      long fixed = 0;
      if (action == GroupAction::kNhHyperplanes) {
        for (unsigned x = 1; x < 1024; ++x)
          if (act[x] == x) ++fixed;
      } else {
        fixed = fix_decomposition(act).total();
      }
      r.weighted_sum += cls.size * fixed;
    }
  }
  if (r.weighted_sum % r.group_order != 0)
    throw std::logic_error("Burnside sum not divisible by the group order");
  r.orbits = r.weighted_sum / r.group_order;
  return r;
}

OrbitPartition enumerate_orbits(const VeldkampSpace& vs,
                                const AutomorphismGroup& grp) {
  std::array<std::array<std::uint16_t, 1024>, 4> gens;
  for (int i = 0; i < 4; ++i)
    gens[i] = hyperplane_action(vs, grp.generators()[i]);

  const auto& lines = vs.lines();
  OrbitPartition part;
  part.orbit_of.assign(lines.size(), -1);
  std::vector<std::int32_t> stack;
  for (std::int32_t start = 0; start < static_cast<std::int32_t>(lines.size());
       ++start) {
    if (part.orbit_of[start] >= 0) continue;
    std::int32_t oid = part.count();
    part.sizes.push_back(0);
    part.rep.push_back(start);
    part.orbit_of[start] = oid;
    stack.push_back(start);
    while (!stack.empty()) {
      std::int32_t li = stack.back();
      stack.pop_back();
      ++part.sizes[oid];
      const VLine& l = lines[li];
      for (const auto& t : gens) {
        std::int32_t j = vs.line_index(t[l.a], t[l.b]);
        if (part.orbit_of[j] < 0) {
          part.orbit_of[j] = oid;
          stack.push_back(j);
        }
      }
    }
  }
  return part;
}

Mask45 core_of_line(const VeldkampSpace& vs, VLine l) {
  return vs.point_set(l.a) & vs.point_set(l.b) & vs.point_set(l.c);
}

std::array<QuadLabel, 3> core_layer_labels(const VeldkampSpace& vs, Mask45 core) {
  const GqGeometry& gq = vs.hexagon().gq();
  return {gq.classify_subset(Mask15(core & kFull15)),
          gq.classify_subset(Mask15((core >> 15) & kFull15)),
          gq.classify_subset(Mask15((core >> 30) & kFull15))};
}

CoreProfile core_profile(const VeldkampSpace& vs, VLine l) {
  const NearHexagon& nh = vs.hexagon();
  Mask45 core = core_of_line(vs, l);
  CoreProfile p;
  p.pt = static_cast<std::uint8_t>(popcount(core));
  p.ln = static_cast<std::uint8_t>(nh.lines_contained(core));
  for (int q = 0; q < NearHexagon::kPoints; ++q)
    if (has_bit(core, q)) ++p.orders[nh.point_order(core, q)];
  ++p.comp[type_index(vs.type(l.a)) - 1];
  ++p.comp[type_index(vs.type(l.b)) - 1];
  ++p.comp[type_index(vs.type(l.c)) - 1];
  p.labels = core_layer_labels(vs, core);
  std::sort(p.labels.begin(), p.labels.end());
  return p;
}

namespace {

Mask15 slice(Mask45 core, int layer) {
  return Mask15((core >> (15 * layer)) & kFull15);
}

// layers of the core carrying the given shape
std::vector<int> layers_with(const GqGeometry& gq, Mask45 core, QuadLabel lab) {
  std::vector<int> out;
  for (int l = 0; l < 3; ++l)
    if (gq.classify_subset(slice(core, l)) == lab) out.push_back(l);
  return out;
}

// the GQ point where the two lines of a g-perp meet
int gperp_center(const GqGeometry& gq, Mask15 s) {
  Mask15 common = kFull15;
  int inner = 0;
  for (int l = 0; l < GqGeometry::kLines; ++l)
    if ((s & gq.line_mask(l)) == gq.line_mask(l)) {
      common &= gq.line_mask(l);
      ++inner;
    }
  if (inner != 2 || popcount(common) != 1)
    throw std::invalid_argument("not a g-perp");
  return std::countr_zero(common);
}

int unitriad_center(const GqGeometry& gq, Mask15 s) {
  Mask15 c = gq.triad_centers(s);
  if (popcount(c) != 1) throw std::invalid_argument("not a unicentric triad");
  return std::countr_zero(c);
}

int the_point(Mask15 s) {
  if (popcount(s) != 1) throw std::invalid_argument("not a single point");
  return std::countr_zero(s);
}

bool share_gq_line(const GqGeometry& gq, int p, int q) {
  return p == q || gq.collinear(p, q);
}

struct Shapes {
  const GqGeometry& gq;
  Mask45 core;
  std::vector<int> need(QuadLabel lab, int n) const {
    auto v = layers_with(gq, core, lab);
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("core shape does not fit the footnote");
    return v;
  }
};

}  // namespace

int discriminator_value(const GqGeometry& gq, Mask45 core, Footnote fn) {
  Shapes sh{gq, core};
  switch (fn) {
    case Footnote::kF1: {  // 3 g-perps: two centers on a common type-one line
      auto ls = sh.need(QuadLabel::kGPerp, 3);
      int c0 = gperp_center(gq, slice(core, ls[0]));
      int c1 = gperp_center(gq, slice(core, ls[1]));
      int c2 = gperp_center(gq, slice(core, ls[2]));
      return (c0 == c1 || c0 == c2 || c1 == c2) ? 1 : 0;
    }
    case Footnote::kF2: {  // g-perp center on a triad center's type-one line
      auto lg = sh.need(QuadLabel::kGPerp, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      int d = gperp_center(gq, slice(core, lg[0]));
      return (d == unitriad_center(gq, slice(core, lt[0])) ||
              d == unitriad_center(gq, slice(core, lt[1]))) ? 1 : 0;
    }
    case Footnote::kF3:
    case Footnote::kF8: {  // two triad centers joined by a type-one line
      sh.need(fn == Footnote::kF3 ? QuadLabel::kGPerp : QuadLabel::kSinglePoint, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      return unitriad_center(gq, slice(core, lt[0])) ==
                     unitriad_center(gq, slice(core, lt[1]))
                 ? 1
                 : 0;
    }
    case Footnote::kF4: {  // g-perp lines meeting type-one lines at triad centers
      auto lg = sh.need(QuadLabel::kGPerp, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      int c0 = unitriad_center(gq, slice(core, lt[0]));
      int c1 = unitriad_center(gq, slice(core, lt[1]));
      Mask15 s = slice(core, lg[0]);
      int hit = 0;
      for (int l = 0; l < GqGeometry::kLines; ++l) {
        Mask15 m = gq.line_mask(l);
        if ((s & m) == m && (((m >> c0) & 1) || ((m >> c1) & 1))) ++hit;
      }
      return hit;
    }
    case Footnote::kF5: {  // triad points' type-one lines cut a quad in an ovoid
      sh.need(QuadLabel::kLine, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      Mask15 u = Mask15(slice(core, lt[0]) | slice(core, lt[1]));
      return (popcount(u) == 5 &&
              gq.classify_subset(u) == QuadLabel::kOvoid) ? 1 : 0;
    }
    case Footnote::kF6: {  // type-two lines through the point meeting the
                           // type-one line through the g-perp center
      auto lp = sh.need(QuadLabel::kSinglePoint, 1);
      auto lg = sh.need(QuadLabel::kGPerp, 1);
      sh.need(QuadLabel::kUniTriad, 1);
      int q = the_point(slice(core, lp[0]));
      int d = gperp_center(gq, slice(core, lg[0]));
      int hit = 0;
      for (std::uint8_t l : gq.lines_through(q))
        if ((gq.line_mask(l) >> d) & 1) ++hit;
      return hit;
    }
    case Footnote::kF7: {  // a triad containing the other two triads' centers
      auto lt = sh.need(QuadLabel::kUniTriad, 3);
      std::array<Mask15, 3> t;
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) {
        t[i] = slice(core, lt[i]);
        c[i] = unitriad_center(gq, t[i]);
      }
      int n = 0;
      for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (((t[i] >> c[j]) & 1) && ((t[i] >> c[k]) & 1)) ++n;
      }
      return n;
    }
    case Footnote::kF9: {  // point on a type-one line through a tritriad center
      auto lp = sh.need(QuadLabel::kSinglePoint, 1);
      auto lt = sh.need(QuadLabel::kTriTriad, 1);
      sh.need(QuadLabel::kUniTriad, 1);
      int q = the_point(slice(core, lp[0]));
      return (gq.triad_centers(slice(core, lt[0])) >> q) & 1;
    }
    case Footnote::kF10:
    case Footnote::kDagger: {  // point vs the two triad centers' type-one lines
      auto lp = sh.need(QuadLabel::kSinglePoint, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      int q = the_point(slice(core, lp[0]));
      int n = (q == unitriad_center(gq, slice(core, lt[0]))) +
              (q == unitriad_center(gq, slice(core, lt[1])));
      return fn == Footnote::kF10 ? (n > 0 ? 1 : 0) : n;
    }
    case Footnote::kF11: {  // two triad centers inside a common grid-quad
      sh.need(QuadLabel::kSinglePoint, 1);
      auto lt = sh.need(QuadLabel::kUniTriad, 2);
      return share_gq_line(gq, unitriad_center(gq, slice(core, lt[0])),
                           unitriad_center(gq, slice(core, lt[1]))) ? 1 : 0;
    }
    case Footnote::kStar: {  // triad center's type-one line vs g-perp centers
      auto lg = sh.need(QuadLabel::kGPerp, 2);
      auto lt = sh.need(QuadLabel::kUniTriad, 1);
      int c = unitriad_center(gq, slice(core, lt[0]));
      return (c == gperp_center(gq, slice(core, lg[0]))) +
             (c == gperp_center(gq, slice(core, lg[1])));
    }
  }
  throw std::invalid_argument("unknown footnote");
}

namespace {

struct ProfileKey {
  CoreProfile p;
  friend bool operator<(const ProfileKey& a, const ProfileKey& b) {
    return a.p < b.p;
  }
};

CoreProfile fixture_profile(const fixtures::Table3Row& r) {
  CoreProfile p;
  p.pt = static_cast<std::uint8_t>(r.pt);
  p.ln = static_cast<std::uint8_t>(r.ln);
  for (int i = 0; i < 5; ++i) p.orders[i] = static_cast<std::uint8_t>(r.orders[i]);
  for (int i = 0; i < 8; ++i) p.comp[i] = static_cast<std::uint8_t>(r.comp[i]);
  auto lab = [](const char* t) {
    using L = QuadLabel;
    for (L l : {L::kFull, L::kGrid, L::kPerp, L::kOvoid, L::kGPerp, L::kLine,
                L::kTriTriad, L::kUniTriad, L::kSinglePoint})
      if (std::string_view(to_token(l)) == t) return l;
    throw std::logic_error("bad fixture label");
  };
  p.labels = {lab(r.labels[0]), lab(r.labels[1]), lab(r.labels[2])};
  std::sort(p.labels.begin(), p.labels.end());
  return p;
}

// pt/ln/composition/labels, ignoring the order histogram
std::array<std::uint32_t, 4> relaxed_key(const CoreProfile& p) {
  std::uint32_t comp = 0, labs = 0;
  for (int i = 0; i < 8; ++i) comp = comp * 4 + p.comp[i];
  for (auto l : p.labels) labs = labs * 16 + static_cast<std::uint32_t>(l);
  return {p.pt, p.ln, comp, labs};
}

}  // namespace

Classification classify_lines(const VeldkampSpace& vs,
                              const AutomorphismGroup& grp) {
  const GqGeometry& gq = vs.hexagon().gq();
  Classification cls;
  cls.orbits = enumerate_orbits(vs, grp);

  const int n = cls.orbits.count();
  cls.records.resize(n);
  for (int o = 0; o < n; ++o) {
    OrbitRecord& r = cls.records[o];
    r.orbit_id = o;
    r.size = cls.orbits.sizes[o];
    r.rep = vs.lines()[cls.orbits.rep[o]];
    r.profile = core_profile(vs, r.rep);
    r.rep_labels = core_layer_labels(vs, core_of_line(vs, r.rep));
    for (QuadLabel l : r.rep_labels)
      if (l == QuadLabel::kEmpty || l == QuadLabel::kOther)
        throw std::logic_error("unexpected empty/other core slice");
  }

  // reference rows by profile, full and relaxed
  std::map<CoreProfile, std::vector<int>> rows_full;
  std::map<std::array<std::uint32_t, 4>, std::vector<int>> rows_relaxed;
  for (const auto& row : fixtures::kTable3) {
    CoreProfile p = fixture_profile(row);
    rows_full[p].push_back(row.tp);
    rows_relaxed[relaxed_key(p)].push_back(row.tp);
  }

  for (OrbitRecord& r : cls.records) {
    std::vector<int> cand;
    if (auto it = rows_full.find(r.profile); it != rows_full.end()) {
      cand = it->second;
    } else if (auto it2 = rows_relaxed.find(relaxed_key(r.profile));
               it2 != rows_relaxed.end() && it2->second.size() == 1) {
      cand = it2->second;
      r.orders_match = false;
    }
    if (cand.empty()) continue;
    if (cand.size() == 1) {
      r.table_row = cand[0];
    } else if (cand == std::vector<int>{149, 150, 151}) {
      Mask45 core = core_of_line(vs, r.rep);
      if (discriminator_value(gq, core, Footnote::kF10)) {
        r.table_row = 149;
        r.footnote = 10;
        r.fn_value = 1;
      } else {
        r.footnote = 11;
        r.fn_value = discriminator_value(gq, core, Footnote::kF11);
        r.table_row = r.fn_value ? 150 : 151;
      }
    } else {
      // a footnoted sibling pair; all candidates carry the same footnote
      int fn = 0;
      for (const auto& row : fixtures::kTable3)
        if (row.tp == cand[0]) fn = row.footnote;
      Mask45 core = core_of_line(vs, r.rep);
      r.footnote = fn;
      r.fn_value = discriminator_value(gq, core, static_cast<Footnote>(fn));
      for (const auto& rule : fixtures::kFootnoteRules)
        if (rule.footnote == fn)
          r.table_row = r.fn_value ? rule.row_true : rule.row_false;
    }
    if (r.table_row == fixtures::kStarRow)
      r.split_value =
          discriminator_value(gq, core_of_line(vs, r.rep), Footnote::kStar);
    if (r.table_row == fixtures::kDaggerRow)
      r.split_value =
          discriminator_value(gq, core_of_line(vs, r.rep), Footnote::kDagger);
  }

  std::sort(cls.records.begin(), cls.records.end(),
            [](const OrbitRecord& a, const OrbitRecord& b) {
              if (a.profile.pt != b.profile.pt) return a.profile.pt > b.profile.pt;
              if (a.profile.ln != b.profile.ln) return a.profile.ln > b.profile.ln;
              if (a.profile.orders != b.profile.orders)
                return a.profile.orders < b.profile.orders;
              if (a.profile.comp != b.profile.comp)
                return a.profile.comp < b.profile.comp;
              if (a.table_row != b.table_row) return a.table_row < b.table_row;
              return a.orbit_id < b.orbit_id;
            });

  std::map<CoreProfile, std::vector<int>> by_profile;
  for (int i = 0; i < n; ++i)
    by_profile[cls.records[i].profile].push_back(i);
  for (auto& [p, idx] : by_profile)
    if (idx.size() > 1) cls.collision_groups.push_back(idx);

  return cls;
}

}  // namespace nearhex
