#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "syzcurve/classifier.hpp"

namespace syzcurve {

enum class FieldMode { Auto, Rational, Prime };

FieldMode parse_field_mode(const std::string& s);
std::string to_string(FieldMode m);

struct AnalyzeOptions {
  FieldMode field = FieldMode::Auto;
  std::uint64_t seed = 1;
  std::optional<int> max_table_degree;  // default 2d
};

/// Field-independent outcome of the pipeline for one curve over one field.
struct CurveAnalysis {
  int degree = 0;
  Reducedness reducedness = Reducedness::Reduced;
  std::optional<InvariantBundle> invariants;  // absent for non-reduced input
  std::optional<Classification> classification;
  RankLog ranks;

  /// Compares everything except the rank log.
  bool same_results(const CurveAnalysis& o) const {
    return degree == o.degree && reducedness == o.reducedness && invariants == o.invariants &&
           classification == o.classification;
  }
};

/// Full pipeline over a fixed field: reducedness, invariants, the three
/// criteria and structural verification.
template <class F>
CurveAnalysis analyze_over(const HomogPoly<RationalField>& f, const F& field, int max_table_degree) {
  JacobianModule<F> mod(convert(f, field));
  CurveAnalysis out;
  out.degree = f.degree();
  out.reducedness = mod.reducedness_check();
  if (out.reducedness != Reducedness::NonReduced) {
    out.invariants = compute_invariants(mod, max_table_degree);
    check_bundle(*out.invariants);
    out.classification = classify(mod, *out.invariants);
  }
  out.ranks = mod.rank_log();
  return out;
}

struct CurveReport {
  std::string input;
  std::string polynomial;  // expanded, in parser syntax
  CurveAnalysis analysis;
  FieldMode mode = FieldMode::Auto;
  std::uint64_t seed = 1;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> primes;
  std::string field_used;  // "QQ" or "F_p"
};

/// Parses and analyzes. In Auto mode the pipeline runs over two primes from
/// the seed; if they disagree (or hit an unlucky prime) it reruns over Q.
CurveReport analyze(const std::string& expression, const AnalyzeOptions& options = {});
CurveReport analyze(const HomogPoly<RationalField>& f, const std::string& input, const AnalyzeOptions& options);

}  // namespace syzcurve
