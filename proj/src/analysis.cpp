#include "syzcurve/analysis.hpp"

#include "syzcurve/parser.hpp"

namespace syzcurve {

FieldMode parse_field_mode(const std::string& s) {
  if (s == "auto") return FieldMode::Auto;
  if (s == "qq") return FieldMode::Rational;
  if (s == "pp") return FieldMode::Prime;
  throw InputError("unknown field mode '" + s + "' (expected auto, qq or pp)");
}

std::string to_string(FieldMode m) {
  switch (m) {
    case FieldMode::Auto:
      return "auto";
    case FieldMode::Rational:
      return "qq";
    case FieldMode::Prime:
      return "pp";
  }
  return "?";
}

CurveReport analyze(const std::string& expression, const AnalyzeOptions& options) {
  return analyze(parse_poly(expression), expression, options);
}

CurveReport analyze(const HomogPoly<RationalField>& f, const std::string& input, const AnalyzeOptions& options) {
  if (f.degree() < 2) throw InputError("curve degree must be at least 2");
  if (options.max_table_degree && *options.max_table_degree < 0)
    throw InputError("table degree must be non-negative");
  CurveReport rep;
  rep.input = input;
  rep.polynomial = to_string(f);
  rep.mode = options.field;
  rep.seed = options.seed;
  const int max_k = options.max_table_degree.value_or(2 * f.degree());

  auto over_rationals = [&] {
    rep.analysis = analyze_over(f, RationalField{}, max_k);
    rep.field_used = "QQ";
  };

  if (options.field == FieldMode::Rational) {
    over_rationals();
    return rep;
  }
  rep.primes = primes_from_seed(options.seed);
  const PrimeField first(rep.primes->first);
  if (options.field == FieldMode::Prime) {
    rep.analysis = analyze_over(f, first, max_k);
    rep.field_used = first.name();
    return rep;
  }
  try {
    auto a = analyze_over(f, first, max_k);
    auto b = analyze_over(f, PrimeField(rep.primes->second), max_k);
    if (a.same_results(b) && a.ranks == b.ranks) {
      rep.analysis = std::move(a);
      rep.field_used = first.name();
      return rep;
    }
  } catch (const UnluckyPrime&) {
  } catch (const InternalInconsistency&) {
    // An unlucky prime can only lower ranks; settle it over Q.
  }
  over_rationals();
  return rep;
}

}  // namespace syzcurve
