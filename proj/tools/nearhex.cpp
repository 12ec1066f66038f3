#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nearhex/report.hpp"

namespace {

using nearhex::Engine;
using nearhex::Format;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw CLI::ValidationError("--format", "expected text, csv or json");
}

int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open " << out_path << "\n";
    return 2;
  }
  f << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearhex: hyperplane and Veldkamp-line classification of the "
               "near hexagon L3 x GQ(2,2)"};
  app.require_subcommand(1);

  int threads = 0;
  std::string format_name = "text";
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (0 = auto)");
  app.add_option("--format", format_name, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* cmd_build = app.add_subcommand("build", "construct all structures");
  bool check = false;
  cmd_build->add_flag("--check", check, "run structural invariants");

  auto* cmd_table = app.add_subcommand("table", "emit a classification table");
  int which = 0;
  cmd_table->add_option("which", which, "1, 2 or 3")->required();

  auto* cmd_burnside =
      app.add_subcommand("burnside", "orbit counts for the four actions");
  auto* cmd_classify =
      app.add_subcommand("classify", "orbit enumeration summary");
  auto* cmd_verify =
      app.add_subcommand("verify", "check everything against the reference");

  auto* cmd_orbit_of =
      app.add_subcommand("orbit-of", "inspect the line spanned by two hyperplanes");
  int h1 = 0, h2 = 0;
  cmd_orbit_of->add_option("h1", h1, "hyperplane id, 1..1023")->required();
  cmd_orbit_of->add_option("h2", h2, "hyperplane id, 1..1023")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Format format = parse_format(format_name);

  try {
    Engine engine(threads);

    if (cmd_build->parsed()) {
      std::cout << nearhex::build_summary(engine, check) << "\n";
      return 0;
    }

    if (cmd_table->parsed()) {
      std::string content;
      switch (which) {
        case 1: content = nearhex::render_table1(engine, format); break;
        case 2: content = nearhex::render_table2(engine, format); break;
        case 3: content = nearhex::render_table3(engine, format); break;
        default:
          std::cerr << "unknown table " << which << " (expected 1, 2 or 3)\n";
          return 2;
      }
      return emit(content, out_path);
    }

    if (cmd_burnside->parsed())
      return emit(nearhex::render_burnside(engine, format), out_path);

    if (cmd_classify->parsed()) {
      const auto& cls = engine.classification();
      std::ostringstream os;
      long sum = 0;
      for (long s : cls.orbits.sizes) sum += s;
      os << "orbits: " << cls.orbits.count() << "\n";
      os << "lines: " << sum << "\n";
      os << "collision groups (profiles shared by several orbits): "
         << cls.collision_groups.size() << "\n";
      std::map<long, int> hist;
      for (long s : cls.orbits.sizes) ++hist[s];
      os << "orbit size histogram:";
      for (auto [size, count] : hist) os << " " << size << "x" << count;
      os << "\n";
      return emit(os.str(), out_path);
    }

    if (cmd_verify->parsed()) {
      nearhex::VerifyReport report = nearhex::run_verification(engine);
      int rc = emit(nearhex::render_verify(report), out_path);
      if (rc) return rc;
      return report.all_pass ? 0 : 1;
    }

    if (cmd_orbit_of->parsed()) {
      if (h1 < 1 || h1 > 1023 || h2 < 1 || h2 > 1023 || h1 == h2) {
        std::cerr << "need two distinct hyperplane ids in 1..1023\n";
        return 2;
      }
      const auto& vs = engine.veldkamp();
      const auto& cls = engine.classification();
      int li = vs.line_index(static_cast<nearhex::HypId>(h1),
                             static_cast<nearhex::HypId>(h2));
      nearhex::VLine line = vs.lines()[li];
      int orbit = cls.orbits.orbit_of[li];
      const nearhex::OrbitRecord* rec = nullptr;
      for (const auto& r : cls.records)
        if (r.orbit_id == orbit) rec = &r;
      std::ostringstream os;
      os << "line: {" << line.a << ", " << line.b << ", " << line.c << "}"
         << " (third id = " << (h1 ^ h2) << ")\n";
      os << "members: " << nearhex::to_token(vs.type(line.a)) << " "
         << nearhex::to_token(vs.type(line.b)) << " "
         << nearhex::to_token(vs.type(line.c)) << "\n";
      os << "orbit: " << orbit << ", size " << cls.orbits.sizes[orbit] << "\n";
      if (rec) {
        os << "profile: pt " << int(rec->profile.pt) << ", ln "
           << int(rec->profile.ln) << ", orders";
        for (int i = 0; i < 5; ++i) os << " " << int(rec->profile.orders[i]);
        os << ", quads";
        for (auto l : rec->rep_labels) os << " " << nearhex::to_token(l);
        os << "\n";
        os << "table row: " << rec->table_row << "\n";
      }
      return emit(os.str(), out_path);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
