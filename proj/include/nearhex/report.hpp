#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "nearhex/classify.hpp"
#include "nearhex/fixtures.hpp"
#include "nearhex/group.hpp"

namespace nearhex {

enum class Format { kText, kCsv, kJson };

// Builds and owns the whole stack; the classification is computed on first
// use and cached.  Everything is immutable afterwards.
class Engine {
 public:
  explicit Engine(int threads = 0);

  const NearHexagon& hexagon() const { return *nh_; }
  const VeldkampSpace& veldkamp() const { return *vs_; }
  const AutomorphismGroup& group() const { return *grp_; }
  const Classification& classification() const;
  int threads() const { return threads_; }

 private:
  int threads_;
  std::unique_ptr<NearHexagon> nh_;
  std::unique_ptr<VeldkampSpace> vs_;
  std::unique_ptr<AutomorphismGroup> grp_;
  mutable std::once_flag cls_once_;
  mutable std::unique_ptr<Classification> cls_;
};

std::string render_table1(const Engine& e, Format f);
std::string render_table2(const Engine& e, Format f);
std::string render_table3(const Engine& e, Format f);
std::string render_burnside(const Engine& e, Format f);

// One verification check; criterion 0 marks infrastructure checks that are
// not part of the numbered acceptance list.
struct Check {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing and nothing to add
};

struct VerifyReport {
  std::vector<Check> checks;
  std::array<bool, 11> criterion_pass{};  // index 1..10
  bool all_pass = false;
};

VerifyReport run_verification(const Engine& e);

// Per-check lines, then per-criterion summary lines.
std::string render_verify(const VerifyReport& r, bool checks_too = true);

// Structural summary used by `build --check`; throws on failure.
std::string build_summary(const Engine& e, bool check);

}  // namespace nearhex
