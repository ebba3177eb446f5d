// syzcurve: Jacobian syzygies, Tjurina numbers and freeness of plane curves.
//
// Exit codes: 0 success, 1 corpus failures, 2 input error, 3 internal
// inconsistency (a computed value contradicts a theorem).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "syzcurve/corpus.hpp"
#include "syzcurve/parser.hpp"
#include "syzcurve/report.hpp"

using namespace syzcurve;

namespace {

constexpr int kExitCorpusFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct FieldFlags {
  std::string field = "auto";
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--field", field, "Coefficient field strategy")->check(CLI::IsMember({"auto", "qq", "pp"}));
    cmd->add_option("--seed", seed, "Seed for choosing the working primes");
  }
  AnalyzeOptions options() const {
    AnalyzeOptions o;
    o.field = parse_field_mode(field);
    o.seed = seed;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobian syzygies, global Tjurina numbers and freeness of reduced plane curves"};
  app.require_subcommand(1);

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants and free / nearly free classification of a curve");
  std::string poly_text, poly_file;
  bool json = false;
  int max_table = -1;
  FieldFlags analyze_field;
  auto* poly_opt = analyze_cmd->add_option("--poly", poly_text, "Polynomial expression in x, y, z");
  auto* file_opt = analyze_cmd->add_option("--file", poly_file, "Curve file (expression, '#' metadata lines)");
  poly_opt->excludes(file_opt);
  analyze_cmd->add_flag("--json", json, "Emit JSON");
  analyze_cmd->add_option("--max-degree-table", max_table, "Last degree of the ar/m/delta tables (default 2d)");
  analyze_field.add_to(analyze_cmd);

  // intervals
  auto* intervals_cmd = app.add_subcommand("intervals", "du Plessis-Wall intervals [tau(r)_min, tau(r)_max]");
  int interval_degree = 0;
  intervals_cmd->add_option("--degree", interval_degree, "Curve degree d")->required();
  intervals_cmd->add_flag("--json", json, "Emit JSON");

  // terao
  auto* terao_cmd = app.add_subcommand("terao", "Does tau pin down mdr for lattice-equivalent arrangements?");
  int terao_degree = 0;
  long long terao_tau = -1;
  std::string lattice_file, lines_file;
  FieldFlags terao_field;
  auto* deg_opt = terao_cmd->add_option("--degree", terao_degree, "Number of lines d");
  auto* tau_opt = terao_cmd->add_option("--tau", terao_tau, "Global Tjurina number");
  auto* lat_opt = terao_cmd->add_option("--lattice", lattice_file, "Lattice summary file");
  auto* lines_opt = terao_cmd->add_option("--lines", lines_file, "Line file: three rationals per line");
  deg_opt->needs(tau_opt);
  tau_opt->needs(deg_opt);
  lat_opt->excludes(deg_opt)->excludes(lines_opt);
  lines_opt->excludes(deg_opt);
  terao_cmd->add_flag("--json", json, "Emit JSON");
  terao_field.add_to(terao_cmd);

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Run and cross-check every .curve file in a directory");
  std::string corpus_dir;
  int oracle_degree = 6;
  FieldFlags corpus_field;
  corpus_cmd->add_option("dir", corpus_dir, "Corpus directory")->required();
  corpus_cmd->add_option("--oracle-max-degree", oracle_degree, "Run the saturation oracle up to this degree");
  corpus_cmd->add_flag("--json", json, "Emit JSON");
  corpus_field.add_to(corpus_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) {
      if (poly_opt->count() == 0 && file_opt->count() == 0) throw InputError("analyze needs --poly or --file");
      std::string expr = poly_opt->count() ? poly_text : parse_curve_file(read_file(poly_file)).expression;
      auto options = analyze_field.options();
      if (max_table >= 0) options.max_table_degree = max_table;
      auto report = analyze(expr, options);
      if (json)
        std::cout << to_json(report).dump(2) << '\n';
      else
        std::cout << to_text(report);
      return 0;
    }

    if (intervals_cmd->parsed()) {
      auto rows = interval_table(interval_degree);
      if (json) {
        std::cout << to_json(rows, interval_degree).dump(2) << '\n';
      } else {
        std::cout << "d = " << interval_degree << '\n';
        for (const auto& r : rows) std::cout << "r=" << r.r << "  [" << r.tau_min << ", " << r.tau_max << "]\n";
      }
      return 0;
    }

    if (terao_cmd->parsed()) {
      int d = terao_degree;
      long long tau = terao_tau;
      std::optional<CurveReport> algebraic;
      if (lat_opt->count()) {
        auto lattice = parse_lattice_summary(read_file(lattice_file));
        d = lattice.degree;
        tau = lattice_tjurina(lattice);
      } else if (lines_opt->count()) {
        auto lines = parse_line_set(read_file(lines_file));
        d = lines.degree();
        tau = lattice_tjurina(intersection_lattice(lines));
        algebraic = analyze(arrangement_poly(lines), lines_file, terao_field.options());
      } else if (!deg_opt->count()) {
        throw InputError("terao needs --degree/--tau, --lattice or --lines");
      }
      auto result = terao_rigidity(d, tau);
      if (json) {
        auto j = to_json(result, d, tau);
        if (algebraic) {
          const auto& b = algebraic->analysis.invariants;
          j["algebraic"] = to_json(*algebraic);
          j["tau_agrees"] = b && b->tau == tau;
        }
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "d = " << d << ", tau = " << tau << ": " << to_string(result) << '\n';
        if (algebraic) {
          const auto& b = algebraic->analysis.invariants;
          std::cout << "algebraic tau = " << (b ? std::to_string(b->tau) : "n/a")
                    << (b && b->tau == tau ? " (agrees with the lattice)" : " (DISAGREES with the lattice)") << '\n';
          if (algebraic->analysis.classification)
            std::cout << "verdict = " << to_string(algebraic->analysis.classification->verdict) << '\n';
        }
      }
      return 0;
    }

    if (corpus_cmd->parsed()) {
      auto summary = run_corpus(corpus_dir, corpus_field.options(), oracle_degree);
      std::size_t passed = 0;
      nlohmann::ordered_json cases = nlohmann::ordered_json::array();
      for (const auto& c : summary.cases) {
        passed += c.passed();
        if (json) {
          cases.push_back({{"name", c.name},
                           {"passed", c.passed()},
                           {"failures", c.failures},
                           {"report", c.report ? to_json(*c.report) : nlohmann::ordered_json()}});
        } else {
          std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name;
          if (c.report && c.report->analysis.classification) {
            const auto& cl = *c.report->analysis.classification;
            std::cout << "  " << to_string(cl.verdict);
            if (cl.exponents) std::cout << "(" << cl.exponents->first << "," << cl.exponents->second << ")";
          }
          std::cout << '\n';
          for (const auto& f : c.failures) std::cout << "     " << f << '\n';
        }
      }
      if (json) {
        nlohmann::ordered_json j{{"schema", kJsonSchemaVersion},
                                 {"cases", cases},
                                 {"warnings", summary.warnings},
                                 {"passed", passed},
                                 {"total", summary.cases.size()}};
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& w : summary.warnings) std::cout << "warning: " << w << '\n';
        std::cout << passed << "/" << summary.cases.size() << " passed\n";
      }
      return summary.passed() ? 0 : kExitCorpusFailure;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
