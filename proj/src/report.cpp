#include "nearhex/report.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

namespace nearhex {

namespace {

using ordered_json = nlohmann::ordered_json;

void parallel_for(int n, int threads, const std::function<void(int, int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || n < 2 * threads) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& th : pool) th.join();
}

std::string shape_string(const VeldkampSpace& vs, HypId h) {
  Quadruple q = vs.quadruple_of(h);
  std::array<int, 4> n{};
  for (auto d : q.part) ++n[d];
  std::sort(n.begin(), n.end(), std::greater<>());
  std::string s = "(";
  for (int i = 0; i < 4 && n[i]; ++i) {
    if (i) s += ' ';
    s += std::to_string(n[i]);
  }
  return s + ")";
}

}  // namespace

Engine::Engine(int threads) : threads_(threads) {
  nh_ = std::make_unique<NearHexagon>();
  vs_ = std::make_unique<VeldkampSpace>(*nh_);
  grp_ = std::make_unique<AutomorphismGroup>(*nh_);
}

const Classification& Engine::classification() const {
  std::call_once(cls_once_, [this] {
    cls_ = std::make_unique<Classification>(classify_lines(*vs_, *grp_));
  });
  return *cls_;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

struct TableData {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string to_text(const TableData& t) {
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t c = 0; c < t.columns.size(); ++c) w[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
  std::ostringstream os;
  os << "# " << t.name << "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << row[c] << std::string(w[c] - row[c].size(), ' ');
    }
    os << "\n";
  };
  emit(t.columns);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

std::string to_csv(const TableData& t) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << row[c];
    }
    os << "\n";
  };
  emit(t.columns);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

std::string to_json(const TableData& t) {
  auto cell = [](const std::string& s) -> ordered_json {
    if (s.empty()) return s;
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return s;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return s;
    return std::stol(s);
  };
  ordered_json j;
  j["schema"] = {{"name", t.name}, {"version", 1}};
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json o;
    for (std::size_t c = 0; c < row.size(); ++c) o[t.columns[c]] = cell(row[c]);
    j["rows"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string render(const TableData& t, Format f) {
  switch (f) {
    case Format::kText: return to_text(t);
    case Format::kCsv: return to_csv(t);
    case Format::kJson: return to_json(t);
  }
  return {};
}

}  // namespace

std::string render_table1(const Engine& e, Format f) {
  const VeldkampSpace& vs = e.veldkamp();
  std::array<long, 9> count{};
  std::array<HypId, 9> first{};
  for (unsigned h = 1; h < 1024; ++h) {
    int t = type_index(vs.type(static_cast<HypId>(h)));
    if (!count[t]) first[t] = static_cast<HypId>(h);
    ++count[t];
  }
  TableData t;
  t.name = "hyperplane_types";
  t.columns = {"name", "partition", "orbit_size", "order"};
  for (int k = 1; k <= 8; ++k) {
    long stab = stabilizer_order(vs, e.group(), first[k]);
    t.rows.push_back({fixtures::kTable1[k - 1].name, shape_string(vs, first[k]),
                      std::to_string(count[k]), std::to_string(stab)});
  }
  return render(t, f);
}

std::string render_table2(const Engine& e, Format f) {
  TableData t;
  t.name = "line_orbit_counting";
  t.columns = {"class", "fix1", "fix2", "fix3", "class_size", "product"};
  long total = 0;
  for (const auto& cls : e.group().classes()) {
    auto act = hyperplane_action(e.veldkamp(), cls.rep);
    FixDecomposition d = fix_decomposition(act);
    long product = cls.size * d.total();
    total += product;
    t.rows.push_back({cls.name, std::to_string(d.fix1), std::to_string(d.fix2),
                      std::to_string(d.fix3), std::to_string(cls.size),
                      std::to_string(product)});
  }
  t.rows.push_back({"total", "", "", "", "", std::to_string(total)});
  return render(t, f);
}

std::string render_table3(const Engine& e, Format f) {
  const Classification& cls = e.classification();
  std::vector<int> group_of(cls.records.size(), 0);
  for (std::size_t g = 0; g < cls.collision_groups.size(); ++g)
    for (int idx : cls.collision_groups[g]) group_of[idx] = static_cast<int>(g) + 1;

  TableData t;
  t.name = "line_orbit_types";
  t.columns = {"row", "pt", "ln", "o0", "o1", "o2", "o3", "o4",
               "h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8",
               "first", "second", "third", "orbit_size", "orbit_id",
               "collision_group", "footnote", "fn_value", "split_value",
               "orders_match"};
  for (std::size_t i = 0; i < cls.records.size(); ++i) {
    const OrbitRecord& r = cls.records[i];
    std::vector<std::string> row = {std::to_string(r.table_row),
                                    std::to_string(r.profile.pt),
                                    std::to_string(r.profile.ln)};
    for (int k = 0; k < 5; ++k) row.push_back(std::to_string(r.profile.orders[k]));
    for (int k = 0; k < 8; ++k) row.push_back(std::to_string(r.profile.comp[k]));
    for (int k = 0; k < 3; ++k) row.push_back(to_token(r.rep_labels[k]));
    row.push_back(std::to_string(r.size));
    row.push_back(std::to_string(r.orbit_id));
    row.push_back(std::to_string(group_of[i]));
    row.push_back(std::to_string(r.footnote));
    row.push_back(std::to_string(r.fn_value));
    row.push_back(std::to_string(r.split_value));
    row.push_back(r.orders_match ? "yes" : "no");
    t.rows.push_back(std::move(row));
  }
  return render(t, f);
}

std::string render_burnside(const Engine& e, Format f) {
  TableData t;
  t.name = "burnside_counts";
  t.columns = {"action", "weighted_sum", "group_order", "orbits"};
  auto add = [&](const char* name, GroupAction a) {
    BurnsideResult r = burnside_count(e.veldkamp(), e.group(), a);
    t.rows.push_back({name, std::to_string(r.weighted_sum),
                      std::to_string(r.group_order), std::to_string(r.orbits)});
  };
  add("gq_hyperplanes", GroupAction::kGqHyperplanes);
  add("gq_lines", GroupAction::kGqLines);
  add("nh_hyperplanes", GroupAction::kNhHyperplanes);
  add("nh_lines", GroupAction::kNhLines);
  return render(t, f);
}

std::string build_summary(const Engine& e, bool check) {
  const NearHexagon& nh = e.hexagon();
  const VeldkampSpace& vs = e.veldkamp();
  if (check) {
    for (int p = 0; p < GqGeometry::kPoints; ++p)
      if (nh.gq().lines_through(p).size() != 3)
        throw std::logic_error("gq point not on 3 lines");
    for (unsigned h = 1; h < 1024; ++h)
      if (!nh.is_geometric_hyperplane(vs.point_set(static_cast<HypId>(h))))
        throw std::logic_error("span element fails the hyperplane predicate");
    if (e.group().elements().size() != AutomorphismGroup::kOrder)
      throw std::logic_error("group order is not 4320");
  }
  std::ostringstream os;
  os << NearHexagon::kPoints << " points, " << NearHexagon::kLines << " lines, "
     << VeldkampSpace::kHyperplanes << " hyperplanes, |G|="
     << AutomorphismGroup::kOrder << (check ? ", OK" : "");
  return os.str();
}

// ---------------------------------------------------------------------------
// verification

namespace {

struct Verifier {
  const Engine& e;
  VerifyReport out;

  void add(int criterion, std::string name, bool pass, std::string detail = {}) {
    out.checks.push_back({criterion, std::move(name), pass, std::move(detail)});
  }

  static std::string triple(const FixDecomposition& d) {
    return "(" + std::to_string(d.fix1) + "," + std::to_string(d.fix2) + "," +
           std::to_string(d.fix3) + ")";
  }
};

}  // namespace

VerifyReport run_verification(const Engine& e) {
  Verifier v{e, {}};
  const NearHexagon& nh = e.hexagon();
  const GqGeometry& gq = nh.gq();
  const VeldkampSpace& vs = e.veldkamp();
  const AutomorphismGroup& grp = e.group();

  // --- criterion 1: structure counts ---------------------------------------
  {
    bool per_point3 = true;
    for (int p = 0; p < GqGeometry::kPoints; ++p) {
      int n = 0;
      for (int l = 0; l < GqGeometry::kLines; ++l)
        if ((gq.line_mask(l) >> p) & 1) ++n;
      per_point3 &= (n == 3);
    }
    v.add(1, "gq_structure", per_point3, "15 points, 15 lines, 3 lines/point");
    bool per_point4 = true;
    for (int p = 0; p < NearHexagon::kPoints; ++p) {
      int n = 0;
      for (int l = 0; l < NearHexagon::kLines; ++l)
        if (has_bit(nh.line_mask(l), p)) ++n;
      per_point4 &= (n == 4);
    }
    v.add(1, "nh_structure", per_point4, "45 points, 60 lines, 4 lines/point");
  }

  // --- criterion 2: hyperplane census --------------------------------------
  {
    int pass_count = 0;
    for (unsigned h = 1; h < 1024; ++h)
      if (nh.is_geometric_hyperplane(vs.point_set(static_cast<HypId>(h))))
        ++pass_count;
    v.add(2, "span_census", pass_count == 1023,
          std::to_string(pass_count) + "/1023 span elements are hyperplanes");

    std::array<int, 1024> hits{};
    int valid = 0;
    bool ok = true;
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
      if (nonempty < 2) continue;
      ++valid;
      HypId h = vs.id_of_quadruple(q);
      ok &= (h >= 1 && h <= 1023);
      ++hits[h];
    }
    for (unsigned h = 1; h < 1024; ++h) ok &= (hits[h] == 4);
    v.add(2, "quadruple_census", ok && valid == 4092,
          "valid quadruples " + std::to_string(valid) +
              " = 4^6-4; four-to-one onto 1..1023; (4^6-4)/4 = " +
              std::to_string(valid / 4));
  }

  // --- criterion 3: GQ census ----------------------------------------------
  {
    int perp = 0, grid = 0, ovoid = 0;
    for (unsigned c = 1; c < 32; ++c) {
      switch (gq.classify_subset(vs.gq_point_set(static_cast<std::uint8_t>(c)))) {
        case QuadLabel::kPerp: ++perp; break;
        case QuadLabel::kGrid: ++grid; break;
        case QuadLabel::kOvoid: ++ovoid; break;
        default: break;
      }
    }
    v.add(3, "gq_census", perp == 15 && grid == 10 && ovoid == 6,
          "31 = " + std::to_string(perp) + " perps + " + std::to_string(grid) +
              " grids + " + std::to_string(ovoid) + " ovoids");
  }

  // --- criterion 4: hyperplane-type table ----------------------------------
  {
    std::array<long, 9> count{};
    std::array<HypId, 9> first{};
    for (unsigned h = 1; h < 1024; ++h) {
      int t = type_index(vs.type(static_cast<HypId>(h)));
      if (!count[t]) first[t] = static_cast<HypId>(h);
      ++count[t];
    }
    bool ok = true;
    long sum = 0;
    std::string diff;
    for (int k = 1; k <= 8; ++k) {
      sum += count[k];
      long stab = stabilizer_order(vs, grp, first[k]);
      const auto& ref = fixtures::kTable1[k - 1];
      if (count[k] != ref.orbit_size || stab != ref.stabilizer_order ||
          count[k] * stab != AutomorphismGroup::kOrder) {
        ok = false;
        diff += std::string(ref.name) + " computed " + std::to_string(count[k]) +
                "/" + std::to_string(stab) + "; ";
      }
    }
    v.add(4, "type_orbit_sizes", ok && sum == 1023,
          ok ? "sizes 30,45,18,270,90,120,360,90; orbit x stabilizer = 4320" : diff);
  }

  // --- criterion 5: group and classes --------------------------------------
  {
    v.add(5, "group_order", grp.elements().size() == AutomorphismGroup::kOrder,
          "|G| = " + std::to_string(grp.elements().size()));
    // generator closure
    GroupElement id = grp.element(Perm6{0, 1, 2, 3, 4, 5}, Perm3{0, 1, 2});
    std::set<std::array<std::uint8_t, 45>> seen{id.point};
    std::vector<GroupElement> frontier{id};
    while (!frontier.empty()) {
      GroupElement g = frontier.back();
      frontier.pop_back();
      for (const auto& gen : grp.generators()) {
        GroupElement h = AutomorphismGroup::compose(gen, g);
        if (seen.insert(h.point).second) frontier.push_back(h);
      }
    }
    v.add(5, "generator_closure", seen.size() == AutomorphismGroup::kOrder,
          "closure of the 4 generators has " + std::to_string(seen.size()) +
              " elements");
    long size_sum = 0;
    bool sizes_ok = grp.classes().size() == 33;
    for (std::size_t i = 0; i < grp.classes().size(); ++i) {
      size_sum += grp.classes()[i].size;
      sizes_ok &= grp.classes()[i].size == fixtures::kTable2[i].size;
    }
    v.add(5, "conjugacy_classes", sizes_ok && size_sum == 4320,
          "33 classes, sizes match, sum " + std::to_string(size_sum));
  }

  // --- criterion 6: fix decomposition table --------------------------------
  std::vector<FixDecomposition> decomp(33);
  {
    std::vector<long> scans(33);
    const auto& classes = grp.classes();
    parallel_for(33, e.threads(), [&](int lo, int hi) {
      for (int i = lo; i < hi; ++i) {
        auto act = hyperplane_action(vs, classes[i].rep);
        decomp[i] = fix_decomposition(act);
        scans[i] = count_setwise_fixed(vs, act);
      }
    });
    bool scan_ok = true;
    for (int i = 0; i < 33; ++i) scan_ok &= (decomp[i].total() == scans[i]);
    v.add(6, "fix_scan_crosscheck", scan_ok,
          "fix1+fix2+fix3 equals the direct setwise scan for all 33 classes");

    std::string diff;
    int mismatches = 0;
    long total = 0;
    bool products_ok = true;
    for (int i = 0; i < 33; ++i) {
      const auto& ref = fixtures::kTable2[i];
      FixDecomposition want{ref.fix1, ref.fix2, ref.fix3};
      long product = classes[i].size * decomp[i].total();
      total += product;
      if (decomp[i] != want) {
        ++mismatches;
        diff += std::string(ref.cls) + " computed " + Verifier::triple(decomp[i]) +
                " reference " + Verifier::triple(want) + "; ";
      }
      if (product != ref.product) products_ok = false;
    }
    v.add(6, "table2_rows", mismatches == 0,
          mismatches == 0 ? "all 33 fix triples match"
                          : std::to_string(mismatches) + " rows differ: " + diff);
    FixDecomposition d33 = decomp[5];  // (1 2 3)(4 5 6)
    v.add(6, "exceptional_85", d33.fix3 == 85,
          "(1 2 3)(4 5 6) fix3 = " + std::to_string(d33.fix3));
    v.add(6, "table2_products", products_ok,
          "class size x fixed-line count vs reference products");
    v.add(6, "grand_total", total == fixtures::kGrandTotal,
          "computed " + std::to_string(total) + ", reference " +
              std::to_string(fixtures::kGrandTotal) + " = 4320 x " +
              std::to_string(fixtures::kGrandTotal / 4320));
  }

  // --- criterion 7: orbit counts -------------------------------------------
  const Classification& cls = e.classification();
  {
    long sum = 0;
    for (long s : cls.orbits.sizes) sum += s;
    v.add(7, "direct_orbit_count", cls.orbits.count() == fixtures::kLineOrbits,
          "computed " + std::to_string(cls.orbits.count()) + ", reference " +
              std::to_string(fixtures::kLineOrbits));
    v.add(7, "orbit_size_sum", sum == fixtures::kVeldkampLines,
          "sizes sum to " + std::to_string(sum));
    BurnsideResult bl = burnside_count(vs, grp, GroupAction::kNhLines);
    v.add(7, "burnside_agreement", bl.orbits == cls.orbits.count(),
          "burnside " + std::to_string(bl.orbits) + " vs direct " +
              std::to_string(cls.orbits.count()));
    BurnsideResult bh = burnside_count(vs, grp, GroupAction::kNhHyperplanes);
    BurnsideResult gh = burnside_count(vs, grp, GroupAction::kGqHyperplanes);
    BurnsideResult gl = burnside_count(vs, grp, GroupAction::kGqLines);
    v.add(7, "burnside_small_actions",
          gh.orbits == 3 && gl.orbits == 5 && bh.orbits == 8,
          "gq hyperplanes " + std::to_string(gh.orbits) + ", gq lines " +
              std::to_string(gl.orbits) + ", hexagon hyperplanes " +
              std::to_string(bh.orbits));
  }

  // --- criterion 8: profile table ------------------------------------------
  {
    std::set<int> rows_seen;
    bool distinct = true;
    int matched = 0, exact = 0;
    std::string diff;
    for (const OrbitRecord& r : cls.records) {
      if (r.table_row == 0) continue;
      ++matched;
      if (!rows_seen.insert(r.table_row).second) distinct = false;
      if (r.orders_match) {
        ++exact;
      } else {
        const auto& ref = fixtures::kTable3[r.table_row - 1];
        long ref_incidence = 0, got_incidence = 0;
        for (int i = 0; i < 5; ++i) {
          ref_incidence += static_cast<long>(i) * ref.orders[i];
          got_incidence += static_cast<long>(i) * r.profile.orders[i];
        }
        diff += "row " + std::to_string(r.table_row) + " orders computed (";
        for (int i = 0; i < 5; ++i)
          diff += std::to_string(r.profile.orders[i]) + (i < 4 ? "," : "");
        diff += ") reference (";
        for (int i = 0; i < 5; ++i)
          diff += std::to_string(ref.orders[i]) + (i < 4 ? "," : "");
        diff += "); sum(i*o_i) computed " + std::to_string(got_incidence) +
                " = 3*Ln = " + std::to_string(3L * ref.ln) + ", reference " +
                std::to_string(ref_incidence) + "; ";
      }
    }
    v.add(8, "rows_covered",
          matched == static_cast<int>(cls.records.size()) && distinct &&
              rows_seen.size() == 156,
          std::to_string(matched) + " orbits matched onto " +
              std::to_string(rows_seen.size()) + " distinct reference rows");
    v.add(8, "profile_multiset", exact == matched,
          exact == matched ? "all matched rows agree exactly" : diff);

    auto row_count = [&](int row) {
      int n = 0;
      for (const OrbitRecord& r : cls.records)
        if (r.table_row == row) ++n;
      return n;
    };
    v.add(8, "star_row_two_orbits", row_count(fixtures::kStarRow) == 2,
          "row 50 realized by " + std::to_string(row_count(fixtures::kStarRow)) +
              " orbit(s)");
    v.add(8, "dagger_row_two_orbits", row_count(fixtures::kDaggerRow) == 2,
          "row 149 realized by " +
              std::to_string(row_count(fixtures::kDaggerRow)) + " orbit(s)");

    bool spots = true;
    for (int row : {1, 38, 99, 156}) {
      for (const OrbitRecord& r : cls.records)
        if (r.table_row == row) spots &= r.orders_match;
    }
    v.add(8, "spot_rows", spots, "rows 1, 38, 99, 156 match exactly");
  }

  // --- criterion 9: property suites ----------------------------------------
  {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(1, 1023);
    bool invol = true;
    for (int i = 0; i < 10000; ++i) {
      HypId a = static_cast<HypId>(pick(rng));
      HypId b = static_cast<HypId>(pick(rng));
      if (a == b) continue;
      auto s = vs.sum(a, b);
      invol &= s.has_value() && vs.sum(*s, b).value() == a;
      invol &= (vs.point_set(*s) ==
                (kFull45 & ~(vs.point_set(a) ^ vs.point_set(b))));
    }
    for (unsigned a = 1; a < 32 && invol; ++a)
      for (unsigned b = 1; b < 32; ++b) {
        if (a == b) continue;
        Mask15 sa = vs.gq_point_set(static_cast<std::uint8_t>(a));
        Mask15 sb = vs.gq_point_set(static_cast<std::uint8_t>(b));
        Mask15 sum = Mask15(kFull15 & ~(sa ^ sb));
        invol &= vs.gq_coord(sum) == (a ^ b);
      }
    v.add(9, "sum_involution", invol,
          "10000 random pairs plus the exhaustive GQ-level check");

    bool partition_ok = true;
    for (unsigned a = 1; a < 32; ++a)
      for (unsigned b = 1; b < 32; ++b) {
        SetPartition pa = vs.partition_of(static_cast<std::uint8_t>(a));
        SetPartition pb = vs.partition_of(static_cast<std::uint8_t>(b));
        auto ps = partition_sum(pa, pb);
        if (a == b) {
          partition_ok &= !ps.has_value();
        } else {
          partition_ok &=
              ps.has_value() && vs.coord_of_partition(*ps) == (a ^ b);
        }
      }
    v.add(9, "partition_sum_agreement", partition_ok,
          "set-theoretic sum matches the point-set sum on all pairs of 31");

    const int n = cls.orbits.count();
    std::vector<char> ok_flags(n, 1);
    const auto& elems = grp.elements();
    parallel_for(n, e.threads(), [&](int lo, int hi) {
      std::mt19937 local(777);
      std::uniform_int_distribution<std::size_t> pe(0, elems.size() - 1);
      for (int o = 0; o < hi; ++o) {
        if (o < lo) {  // keep the element stream deterministic per orbit
          for (int i = 0; i < 100; ++i) pe(local);
          continue;
        }
        VLine rep = vs.lines()[cls.orbits.rep[o]];
        CoreProfile base = core_profile(vs, rep);
        Mask45 base_core = core_of_line(vs, rep);
        for (int i = 0; i < 100; ++i) {
          const GroupElement& g = elems[pe(local)];
          auto act = hyperplane_action(vs, g);
          VLine img = act_on_line(act, rep);
          if (core_profile(vs, img) != base) ok_flags[o] = 0;
          Mask45 mapped = 0;
          for (int p = 0; p < NearHexagon::kPoints; ++p)
            if (has_bit(base_core, p)) mapped |= Mask45{1} << g.point[p];
          if (core_of_line(vs, img) != mapped) ok_flags[o] = 0;
        }
      }
    });
    bool inv = std::all_of(ok_flags.begin(), ok_flags.end(),
                           [](char c) { return c != 0; });
    v.add(9, "profile_invariance_and_equivariance", inv,
          "100 random elements per orbit representative; core(g*l) = g(core(l))");
  }

  // --- criterion 10: footnote discriminators --------------------------------
  {
    // orbit members, for the footnoted orbits only
    std::map<int, std::vector<std::int32_t>> members;  // orbit_id -> line idx
    std::set<int> wanted;
    for (const OrbitRecord& r : cls.records)
      if (r.footnote != 0 || r.table_row == fixtures::kStarRow ||
          r.table_row == fixtures::kDaggerRow)
        wanted.insert(r.orbit_id);
    for (std::int32_t li = 0; li < static_cast<std::int32_t>(vs.lines().size());
         ++li)
      if (wanted.count(cls.orbits.orbit_of[li]))
        members[cls.orbits.orbit_of[li]].push_back(li);

    auto constant_value = [&](int orbit_id, Footnote fn, bool& constant) {
      int first = -1;
      constant = true;
      for (std::int32_t li : members[orbit_id]) {
        int val = discriminator_value(gq, core_of_line(vs, vs.lines()[li]), fn);
        if (first < 0) first = val;
        if (val != first) constant = false;
      }
      return first;
    };

    bool all_constant = true, separation = true;
    std::string detail;
    for (const auto& rule : fixtures::kFootnoteRules) {
      std::vector<const OrbitRecord*> recs;
      for (const OrbitRecord& r : cls.records) {
        bool in_group = r.footnote == rule.footnote;
        // footnote 10 governs the whole {149,150,151} profile group
        if (rule.footnote == 10)
          in_group = r.table_row >= 149 && r.table_row <= 151;
        if (in_group) recs.push_back(&r);
      }
      std::set<int> values;
      for (const OrbitRecord* r : recs) {
        bool constant = false;
        int val = constant_value(r->orbit_id, static_cast<Footnote>(rule.footnote),
                                 constant);
        all_constant &= constant;
        values.insert(val);
        if (rule.footnote == 10) {
          if ((val != 0) != (r->table_row == rule.row_true)) separation = false;
        } else if ((val ? rule.row_true : rule.row_false) != r->table_row) {
          separation = false;
        }
      }
      if (rule.footnote != 10 && recs.size() > 1 &&
          values.size() != recs.size())
        separation = false;
      detail += "fn" + std::to_string(rule.footnote) + ":" +
                std::to_string(recs.size()) + " orbit(s); ";
    }
    v.add(10, "footnote_constancy", all_constant,
          "each discriminator constant on every orbit of its group");
    v.add(10, "footnote_separation", separation, detail);

    auto split_check = [&](int row, Footnote fn, const char* name) {
      std::vector<const OrbitRecord*> recs;
      for (const OrbitRecord& r : cls.records)
        if (r.table_row == row) recs.push_back(&r);
      std::set<int> labels;
      bool all_const = true;
      for (const OrbitRecord* r : recs) {
        bool constant = false;
        labels.insert(constant_value(r->orbit_id, fn, constant));
        all_const &= constant;
      }
      bool pass = recs.size() == 2 && labels.size() == 2 && all_const;
      std::string d = "row " + std::to_string(row) + ": " +
                      std::to_string(recs.size()) + " orbit(s), " +
                      std::to_string(labels.size()) +
                      " distinct label(s), measurement constant per orbit";
      v.add(10, name, pass, d);
    };
    split_check(fixtures::kStarRow, Footnote::kStar, "star_split");
    split_check(fixtures::kDaggerRow, Footnote::kDagger, "dagger_split");
  }

  // --- infrastructure checks ------------------------------------------------
  {
    bool schema_ok = true;
    for (auto* fn : {&render_table1, &render_table2, &render_table3}) {
      auto j = ordered_json::parse((*fn)(e, Format::kJson));
      schema_ok &= j.contains("schema") && j["schema"]["version"] == 1 &&
                   j.contains("rows") && j["rows"].is_array() &&
                   !j["rows"].empty();
    }
    v.add(0, "json_schema", schema_ok, "schema header and row arrays present");
    bool deterministic =
        render_table1(e, Format::kCsv) == render_table1(e, Format::kCsv) &&
        render_table3(e, Format::kCsv) == render_table3(e, Format::kCsv);
    v.add(0, "render_determinism", deterministic, "");
  }

  v.out.criterion_pass.fill(true);
  v.out.all_pass = true;
  for (const Check& c : v.out.checks) {
    if (!c.pass) {
      v.out.all_pass = false;
      if (c.criterion >= 1 && c.criterion <= 10)
        v.out.criterion_pass[c.criterion] = false;
    }
  }
  return std::move(v.out);
}

std::string render_verify(const VerifyReport& r, bool checks_too) {
  std::ostringstream os;
  if (checks_too) {
    for (const Check& c : r.checks) {
      os << (c.pass ? "PASS" : "FAIL") << "  ";
      if (c.criterion)
        os << "[criterion " << c.criterion << "] ";
      else
        os << "[infra] ";
      os << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << "\n";
    }
    os << "\n";
  }
  static const char* summaries[11] = {
      nullptr,
      "structure counts",
      "hyperplane census",
      "GQ(2,2) hyperplane census",
      "hyperplane-type orbit sizes and stabilizers",
      "group order and conjugacy classes",
      "fix decompositions vs the reference table",
      "orbit counts, direct and by Burnside",
      "orbit profiles vs the reference table",
      "property suites",
      "footnote discriminators",
  };
  for (int k = 1; k <= 10; ++k)
    os << "criterion " << k << ": " << (r.criterion_pass[k] ? "PASS" : "FAIL")
       << " - " << summaries[k] << "\n";
  os << (r.all_pass ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return os.str();
}

}  // namespace nearhex
