#pragma once

#include <array>
#include <cstdint>

namespace nearhex::fixtures {

// Embedded reference tables.  The verify command diffs computed results
// against these; they are data, not re-derived at runtime.

inline constexpr int kGqPoints = 15;
inline constexpr int kGqLines = 15;
inline constexpr int kNhPoints = 45;
inline constexpr int kNhLines = 60;
inline constexpr int kHyperplanes = 1023;
inline constexpr long kVeldkampLines = 174251;
inline constexpr int kGroupOrder = 4320;
inline constexpr int kClassCount = 33;
inline constexpr int kLineOrbits = 158;        // reference claim
inline constexpr long kGrandTotal = 682560;    // reference claim
inline constexpr int kGqHypOrbits = 3;
inline constexpr int kGqLineOrbits = 5;
inline constexpr int kNhHypOrbits = 8;

struct Table1Row {
  const char* name;        // H1..H8
  const char* partition;   // "(3 3)" etc.
  int orbit_size;
  const char* stabilizer;  // isomorphism type, display only
  int stabilizer_order;
};
extern const std::array<Table1Row, 8> kTable1;

struct Table2Row {
  const char* cls;  // display name, layer factor labelled 7,8,9
  long fix1, fix2, fix3;
  int size;
  long product;
};
extern const std::array<Table2Row, 33> kTable2;

struct Table3Row {
  int tp;                         // 1..156
  int pt, ln;
  std::array<int, 5> orders;      // points of order 0..4
  std::array<int, 8> comp;        // H1..H8 histogram
  std::array<const char*, 3> labels;  // 1st/2nd/3rd quad tokens
  int footnote;                   // 0 = none, 1..11
  bool star;                      // claimed two-orbit split
  bool dagger;                    // claimed two-orbit split
};
extern const std::array<Table3Row, 156> kTable3;

// Footnote polarity: which sibling row a true/false predicate selects.
// Footnotes 4, 6 and 7 yield counts; nonzero counts select row_true.
struct FootnoteRule {
  int footnote;
  int row_true;
  int row_false;
};
extern const std::array<FootnoteRule, 11> kFootnoteRules;

inline constexpr int kStarRow = 50;
inline constexpr int kDaggerRow = 149;

}  // namespace nearhex::fixtures
