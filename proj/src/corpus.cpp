#include "syzcurve/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "syzcurve/parser.hpp"

namespace syzcurve {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

template <class F>
std::vector<long long> oracle_table(const HomogPoly<RationalField>& f, const F& field) {
  JacobianModule<F> mod(convert(f, field));
  std::vector<long long> out;
  for (int j = 0; j <= socle_degree(f.degree()); ++j) out.push_back(n_dim_saturation_oracle(mod, j));
  return out;
}

void check_theorems(const CurveAnalysis& a, std::vector<std::string>& fail) {
  if (!a.invariants || !a.classification) return;
  const auto& b = *a.invariants;
  const auto& c = *a.classification;
  const int d = b.d;
  const int r = b.r;

  if (c.criteria) {
    const auto& k = *c.criteria;
    if (k.tau_test != k.ctst_test || k.tau_test != k.delta_test) fail.push_back("criteria disagree");
  }
  if (b.ct && (c.verdict == Verdict::Free || c.verdict == Verdict::NearlyFree || c.verdict == Verdict::Neither)) {
    const int sum = *b.ct + b.st;
    const bool ok = c.verdict == Verdict::Free         ? sum == b.T
                    : c.verdict == Verdict::NearlyFree ? sum == b.T + 2
                                                       : sum >= b.T + 3;
    if (!ok) fail.push_back("ct+st = " + std::to_string(sum) + " does not match verdict " + to_string(c.verdict));
  }
  if (r == 1 && c.verdict != Verdict::Free && c.verdict != Verdict::NearlyFree)
    fail.push_back("mdr = 1 but the curve is neither free nor nearly free");
  if ((c.verdict == Verdict::Free || c.verdict == Verdict::NearlyFree) && !c.verified)
    fail.push_back("structural verification failed");
  if (c.verdict == Verdict::Free && c.delta_low != 1) fail.push_back("free curve with delta_{d-r-1} != 1");
  if (c.verdict == Verdict::NearlyFree && (c.delta_low != 0 || c.delta_high != 2))
    fail.push_back("nearly free curve with (delta_{d-r-1}, delta_{d-r}) != (0, 2)");
  if (c.verdict == Verdict::Free) {
    for (auto v : b.n.values) {
      if (v != 0) {
        fail.push_back("free curve with nonzero saturation defect");
        break;
      }
    }
  }
  if (!is_unimodal(b.n, b.T)) fail.push_back("n table not unimodal");
  for (int j = 0; j <= b.T; ++j) {
    if (b.n.at(j) != b.n.at(b.T - j)) {
      fail.push_back("n table not symmetric at " + std::to_string(j));
      break;
    }
  }
  if (r >= 1 && b.tau == dpw_tau_max(d, r) - 1) {
    for (int s = 2 * d - r - 2; s <= b.T; ++s) {
      if (b.n.at(s) != 0) fail.push_back("n_" + std::to_string(s) + " != 0 although tau = tau(r)_max - 1");
    }
    if (d - r - 1 < b.ar.end() && b.ar.at(d - r - 1) != dim_binom2(d - 2 * r + 1))
      fail.push_back("ar_{d-r-1} != C(d-2r+1, 2) although tau = tau(r)_max - 1");
    for (int k = std::max(0, d - r - 1); k < b.ar.end(); ++k) {
      if (b.ar.at(k) != 3 * alg_binom2(k + 2) - alg_binom2(d + k + 1) + b.tau)
        fail.push_back("ar_" + std::to_string(k) + " differs from the closed form for nearly free curves");
    }
  }
}

}  // namespace

CurveFile parse_curve_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  CurveFile out;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      t = trim(t.substr(1));
      if (auto colon = t.find(':'); colon != std::string::npos) {
        std::string key = trim(t.substr(0, colon));
        if (!key.empty() && key.find(' ') == std::string::npos) out.meta[key] = trim(t.substr(colon + 1));
      }
      continue;
    }
    if (!out.expression.empty()) out.expression += ' ';
    out.expression += t;
  }
  return out;
}

bool CorpusSummary::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CorpusCase& c) { return c.passed(); });
}

std::vector<long long> saturation_oracle_table(const CurveReport& report) {
  const auto f = parse_poly(report.polynomial);
  if (report.field_used == "QQ" || !report.primes) return oracle_table(f, RationalField{});
  return oracle_table(f, PrimeField(report.primes->first));
}

CorpusCase check_curve(const std::string& name, const CurveFile& file, const AnalyzeOptions& options,
                       int oracle_max_degree) {
  CorpusCase out;
  out.name = name;
  auto& fail = out.failures;
  try {
    out.report = analyze(file.expression, options);
  } catch (const InputError& e) {
    fail.push_back(std::string("input error: ") + e.what());
    return out;
  } catch (const InternalInconsistency& e) {
    fail.push_back(std::string("internal inconsistency: ") + e.what());
    return out;
  }
  const auto& a = out.report->analysis;
  const auto* b = a.invariants ? &*a.invariants : nullptr;
  const auto* c = a.classification ? &*a.classification : nullptr;

  for (const auto& [key, value] : file.meta) {
    if (key == "verdict") {
      const std::string got = c ? to_string(c->verdict) : to_string(a.reducedness);
      if (got != value) fail.push_back("expected verdict " + value + ", got " + got);
    } else if (key == "tau") {
      if (!b || std::to_string(b->tau) != value)
        fail.push_back("expected tau " + value + ", got " + (b ? std::to_string(b->tau) : "none"));
    } else if (key == "mdr") {
      if (!b || std::to_string(b->r) != value)
        fail.push_back("expected mdr " + value + ", got " + (b ? std::to_string(b->r) : "none"));
    } else if (key == "exponents") {
      std::istringstream s(value);
      int e1 = -1, e2 = -1;
      s >> e1 >> e2;
      if (!c || !c->exponents || c->exponents->first != e1 || c->exponents->second != e2)
        fail.push_back("expected exponents " + value);
    } else if (key == "irreducible") {
      if (value == "true" && b && b->r == 1 && (!c || c->verdict != Verdict::NearlyFree))
        fail.push_back("irreducible curve with mdr = 1 is not nearly free");
    }
  }
  check_theorems(a, fail);

  if (b && a.degree <= oracle_max_degree) {
    try {
      const auto oracle = saturation_oracle_table(*out.report);
      if (oracle != b->n.values) fail.push_back("saturation oracle disagrees with the Euler-characteristic formula");
    } catch (const std::exception& e) {
      fail.push_back(std::string("saturation oracle failed: ") + e.what());
    }
  }
  return out;
}

CorpusSummary run_corpus(const std::filesystem::path& dir, const AnalyzeOptions& options, int oracle_max_degree) {
  if (!std::filesystem::is_directory(dir)) throw InputError("corpus: '" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".curve") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  CorpusSummary summary;
  if (files.empty()) summary.warnings.push_back("no .curve files in " + dir.string());
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    summary.cases.push_back(check_curve(path.filename().string(), parse_curve_file(buf.str()), options,
                                        oracle_max_degree));
  }
  return summary;
}

}  // namespace syzcurve
