#include "syzcurve/report.hpp"

#include <sstream>

namespace syzcurve {

using nlohmann::ordered_json;

namespace {

std::string ct_string(const std::optional<int>& ct) { return ct ? std::to_string(*ct) : "infinity"; }

std::string verdict_string(const Classification& c) {
  std::string s = to_string(c.verdict);
  if (c.exponents) s += "(" + std::to_string(c.exponents->first) + "," + std::to_string(c.exponents->second) + ")";
  return s;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

ordered_json to_json(const GradedTable& table) {
  return ordered_json{{"start", table.start}, {"values", table.values}};
}

ordered_json to_json(const CurveReport& report) {
  const auto& a = report.analysis;
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["input"] = report.input;
  j["polynomial"] = report.polynomial;
  j["degree"] = a.degree;
  j["reducedness"] = to_string(a.reducedness);
  if (a.invariants) {
    const auto& b = *a.invariants;
    const bool has_bounds = b.d >= 3 && b.r >= 1;
    j["mdr"] = b.r;
    j["tau"] = b.tau;
    j["tau_bounds"] = has_bounds ? ordered_json{{"min", b.bounds.tau_min}, {"max", b.bounds.tau_max}} : ordered_json();
    j["e_defect"] = has_bounds ? ordered_json(b.e_defect) : ordered_json();
    j["ct"] = b.ct ? ordered_json(*b.ct) : ordered_json("infinity");
    j["st"] = b.st;
    j["T"] = b.T;
  }
  if (a.classification) {
    const auto& c = *a.classification;
    ordered_json cj;
    cj["verdict"] = to_string(c.verdict);
    cj["exponents"] = c.exponents ? ordered_json::array({c.exponents->first, c.exponents->second}) : ordered_json();
    if (c.criteria) {
      cj["criteria"] = {{"tau_test", to_string(c.criteria->tau_test)},
                        {"ctst_test", to_string(c.criteria->ctst_test)},
                        {"delta_test", to_string(c.criteria->delta_test)}};
    } else {
      cj["criteria"] = nullptr;
    }
    cj["symmetry_flag"] = c.symmetry_flag;
    cj["verified"] = c.verified;
    cj["delta_d_minus_r_minus_1"] = c.delta_low ? ordered_json(*c.delta_low) : ordered_json();
    cj["delta_d_minus_r"] = c.delta_high ? ordered_json(*c.delta_high) : ordered_json();
    j["classification"] = cj;
  }
  if (a.invariants) {
    const auto& b = *a.invariants;
    j["tables"] = {{"ar", to_json(b.ar)}, {"m", to_json(b.m)}, {"n", to_json(b.n)}, {"delta", to_json(b.delta)}};
  }
  ordered_json field;
  field["strategy"] = to_string(report.mode);
  field["seed"] = report.seed;
  field["primes"] = report.primes ? ordered_json::array({report.primes->first, report.primes->second}) : ordered_json();
  field["used"] = report.field_used;
  j["field"] = field;
  return j;
}

std::string to_text(const CurveReport& report) {
  const auto& a = report.analysis;
  std::ostringstream out;
  auto row = [&out](const std::string& key, const std::string& value) {
    out << key << ':' << std::string(key.size() < 15 ? 15 - key.size() : 1, ' ') << value << '\n';
  };
  row("input", report.input);
  row("polynomial", report.polynomial);
  row("degree", std::to_string(a.degree));
  row("reducedness", to_string(a.reducedness));
  if (a.invariants) {
    const auto& b = *a.invariants;
    row("mdr", std::to_string(b.r));
    row("tau", std::to_string(b.tau));
    if (b.d >= 3 && b.r >= 1) {
      row("tau bounds", "[" + std::to_string(b.bounds.tau_min) + ", " + std::to_string(b.bounds.tau_max) + "]");
      row("e_defect", std::to_string(b.e_defect));
    }
    row("ct", ct_string(b.ct));
    row("st", std::to_string(b.st));
    row("T", std::to_string(b.T));
  }
  if (a.classification) {
    const auto& c = *a.classification;
    row("verdict", verdict_string(c));
    if (c.criteria) {
      row("criteria", "tau_test=" + to_string(c.criteria->tau_test) + " ctst_test=" + to_string(c.criteria->ctst_test) +
                          " delta_test=" + to_string(c.criteria->delta_test));
    }
    row("symmetry flag", c.symmetry_flag ? "yes" : "no");
    row("verified", c.verified ? "yes" : "no");
    if (c.delta_low && c.delta_high)
      row("delta", "d-r-1: " + std::to_string(*c.delta_low) + ", d-r: " + std::to_string(*c.delta_high));
  }
  if (a.invariants) {
    const auto& b = *a.invariants;
    out << "tables (from degree 0):\n";
    out << "  ar:    " << join(b.ar.values) << '\n';
    out << "  m:     " << join(b.m.values) << '\n';
    out << "  n:     " << join(b.n.values) << '\n';
    out << "  delta: " << join(b.delta.values) << '\n';
  }
  std::string field = report.field_used + " (" + to_string(report.mode);
  if (report.primes)
    field += "; seed " + std::to_string(report.seed) + ", primes " + std::to_string(report.primes->first) + ", " +
             std::to_string(report.primes->second);
  row("field", field + ")");
  return out.str();
}

ordered_json to_json(const std::vector<IntervalRow>& rows, int d) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["degree"] = d;
  j["rows"] = ordered_json::array();
  for (const auto& r : rows) j["rows"].push_back({{"r", r.r}, {"tau_min", r.tau_min}, {"tau_max", r.tau_max}});
  return j;
}

ordered_json to_json(const TeraoResult& t, int d, long long tau) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["degree"] = d;
  j["tau"] = tau;
  j["result"] = to_string(t);
  j["r"] = t.r ? ordered_json(*t.r) : ordered_json();
  return j;
}

}  // namespace syzcurve
