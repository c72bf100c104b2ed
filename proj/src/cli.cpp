#include "severi/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "severi/corpus.hpp"
#include "severi/errors.hpp"
#include "severi/integer.hpp"
#include "severi/json_io.hpp"
#include "severi/severi.hpp"
#include "severi/verify.hpp"

namespace severi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

LatticePolygon read_polygon(const std::string& path) { return validate(points_from_json(read_json(path))); }

struct Output {
  std::ostream& out;
  bool pretty = false;

  void emit(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const CheckTally& t : report.checks) {
    checks.push_back(Json{{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"examples", t.examples}});
  }
  return Json{{"polygons", report.polygons}, {"trials", report.trials}, {"checks", std::move(checks)}, {"ok", report.ok()}};
}

void print_table(std::ostream& out, const VerifyReport& report) {
  out << "polygons " << report.polygons << ", random trials " << report.trials << '\n';
  out << std::left << std::setw(24) << "check" << std::right << std::setw(10) << "passed" << std::setw(10) << "failed"
      << '\n';
  for (const CheckTally& t : report.checks) {
    out << std::left << std::setw(24) << t.name << std::right << std::setw(10) << t.passed << std::setw(10) << t.failed
        << '\n';
    for (const std::string& ex : t.examples) out << "    " << ex << '\n';
  }
  out << (report.ok() ? "PASS" : "FAIL") << '\n';
}

std::string corpus_file_name(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "polygon_%06zu.json", n);
  return buf;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Irreducible components of genus-one Severi varieties of toric surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--json", "Compact machine-readable output (default)");
  app.add_flag("--pretty", pretty, "Indented JSON, and a table for verify");

  std::string path;
  bool oracle = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a polygon file");
  analyze_cmd->add_option("file", path, "Polygon JSON ({\"vertices\": [[x, y], ...]}), or - for stdin")->required();
  analyze_cmd->add_flag("--oracle", oracle, "Also run the brute-force count (always done by analyze)");

  auto* count_cmd = app.add_subcommand("count", "Number of irreducible components");
  count_cmd->add_option("file", path, "Polygon JSON, or - for stdin")->required();
  count_cmd->add_flag("--oracle", oracle, "Check the count against the brute-force path");

  auto* components_cmd = app.add_subcommand("components", "Intermediate lattices with their flags");
  components_cmd->add_option("file", path, "Polygon JSON, or - for stdin")->required();

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form with certificates");
  snf_cmd->add_option("file", path, "Matrix JSON ({\"rows\", \"cols\", \"entries\"}), or - for stdin")->required();

  auto* hsnf_cmd = app.add_subcommand("hsnf", "Homogeneous Smith normal form of a matrix with zero row sums");
  hsnf_cmd->add_option("file", path, "Matrix JSON, or - for stdin")->required();

  CorpusSpec spec;
  std::optional<std::size_t> limit;
  std::string out_dir;
  std::string dedup = "translation";
  const std::map<std::string, Dedup> dedup_modes{{"none", Dedup::None}, {"translation", Dedup::Translation}};

  auto* corpus_cmd = app.add_subcommand("corpus", "Enumerate convex lattice polygons in a box");
  corpus_cmd->add_option("--max-coord", spec.max_coordinate, "Vertices lie in {0..N}^2")->required();
  corpus_cmd->add_option("--limit", limit, "Stop after K polygons");
  corpus_cmd->add_option("--out", out_dir, "Write one JSON file per polygon into DIR");
  corpus_cmd->add_option("--dedup", dedup, "none or translation")->check(CLI::IsMember({"none", "translation"}));

  VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check over the corpus and random trials");
  verify_cmd->add_option("--max-coord", vopts.corpus.max_coordinate, "Corpus box size")->required();
  verify_cmd->add_option("--trials", vopts.trials, "Random unimodular-invariance trials")->capture_default_str();
  verify_cmd->add_option("--seed", vopts.seed, "Seed for the random trials")->capture_default_str();
  verify_cmd->add_option("--threads", vopts.threads, "Worker threads (0: all cores)")->capture_default_str();
  verify_cmd->add_flag("--inject-fault", vopts.inject_fault, "Harness self-test")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInput;
  }

  const Output output{out, pretty};
  try {
    if (*analyze_cmd) {
      output.emit(to_json(analyze(read_polygon(path))));
    } else if (*count_cmd) {
      const LatticePolygon polygon = read_polygon(path);
      const std::int64_t count = count_components(polygon);
      if (oracle) ensure(count == count_components_oracle(polygon), "component count disagrees with the oracle");
      out << count << '\n';
    } else if (*components_cmd) {
      output.emit(to_json(enumerate_components(read_polygon(path))));
    } else if (*snf_cmd) {
      output.emit(to_json(snf(matrix_from_json(read_json(path)))));
    } else if (*hsnf_cmd) {
      output.emit(to_json(hsnf(matrix_from_json(read_json(path)))));
    } else if (*corpus_cmd) {
      spec.dedup = dedup_modes.at(dedup);
      spec.limit = limit;
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      std::size_t n = 0;
      enumerate_corpus(spec, [&](const LatticePolygon& p) {
        if (out_dir.empty()) {
          out << to_json(p).dump() << '\n';
        } else {
          const auto file = std::filesystem::path(out_dir) / corpus_file_name(++n);
          std::ofstream f(file);
          if (!(f << to_json(p).dump() << '\n')) throw ArgumentError("cannot write " + file.string());
          out << file.string() << '\n';
        }
        return true;
      });
    } else if (*verify_cmd) {
      const VerifyReport report = verify(vopts);
      if (pretty) {
        print_table(out, report);
      } else {
        output.emit(to_json(report));
      }
      if (!report.ok()) {
        err << "verification failed\n";
        return kExitInternal;
      }
    }
    return kExitOk;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace severi
