#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzcurve/analysis.hpp"

namespace syzcurve {

/// A curve file: the polynomial expression, optionally preceded by
/// "# key: value" metadata lines. Recognized keys: verdict, tau, mdr,
/// exponents ("d1 d2"), irreducible (true/false). Other '#' lines are
/// comments.
struct CurveFile {
  std::string expression;
  std::map<std::string, std::string> meta;
};

CurveFile parse_curve_file(std::string_view text);

struct CorpusCase {
  std::string name;
  std::vector<std::string> failures;
  std::optional<CurveReport> report;

  bool passed() const { return failures.empty(); }
};

struct CorpusSummary {
  std::vector<CorpusCase> cases;
  std::vector<std::string> warnings;

  bool passed() const;
};

/// Runs one curve and every cross-check: expectations from metadata,
/// criterion agreement, the ct+st trichotomy, the mdr = 1 dichotomy, the
/// nearly free vanishing statements, and (for degree <= oracle_max_degree)
/// the saturation oracle against the Euler-characteristic formula.
CorpusCase check_curve(const std::string& name, const CurveFile& file, const AnalyzeOptions& options,
                       int oracle_max_degree = 6);

/// All *.curve files in `dir`, in filename order.
CorpusSummary run_corpus(const std::filesystem::path& dir, const AnalyzeOptions& options, int oracle_max_degree = 6);

/// Saturation defects n(f)_j for j in [0, T] by the brute-force oracle.
std::vector<long long> saturation_oracle_table(const CurveReport& report);

}  // namespace syzcurve
