#include "syzcurve/arrangements.hpp"

#include <map>
#include <set>
#include <sstream>

#include "syzcurve/errors.hpp"
#include "syzcurve/invariants.hpp"

namespace syzcurve {

namespace {

struct PointLess {
  bool operator()(const ProjectivePoint& a, const ProjectivePoint& b) const {
    for (int i = 0; i < 3; ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

ProjectivePoint cross(const ProjectivePoint& a, const ProjectivePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const ProjectivePoint& p) { return sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0; }

std::string strip_comment(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

mpq_class parse_rational(const std::string& token, int line_no) {
  mpq_class q;
  std::string t = token;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0)
    throw InputError("line " + std::to_string(line_no) + ": '" + token + "' is not a rational number");
  if (t.find('/') != std::string::npos && sgn(q.get_den()) == 0)
    throw InputError("line " + std::to_string(line_no) + ": zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

ProjectivePoint canonical_point(ProjectivePoint p) {
  for (int i = 0; i < 3; ++i) {
    if (sgn(p[i]) != 0) {
      mpq_class s = p[i];
      for (auto& c : p) c /= s;
      return p;
    }
  }
  throw std::invalid_argument("canonical_point: zero vector");
}

LineSet::LineSet(std::vector<ProjectivePoint> lines) : lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (is_zero(lines_[i])) throw InputError("line " + std::to_string(i + 1) + " has all coefficients zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (is_zero(cross(lines_[i], lines_[j])))
        throw InputError("lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
  }
  if (lines_.size() < 3) throw InputError("an arrangement needs at least 3 lines");
}

bool LatticeSummary::pair_count_ok() const {
  long long pairs = 0;
  for (const auto& p : points) {
    if (p.multiplicity < 2) return false;
    pairs += dim_binom2(p.multiplicity);
  }
  return pairs == dim_binom2(degree);
}

HomogPoly<RationalField> arrangement_poly(const LineSet& lines) {
  const RationalField q;
  HomogPoly<RationalField> f = HomogPoly<RationalField>::monomial(q, Monomial{}, q.one());
  for (const auto& l : lines.lines()) {
    HomogPoly<RationalField> form(q, 1);
    for (int i = 0; i < 3; ++i) form.add_term(Monomial{i == 0, i == 1, i == 2}, l[i]);
    f = f * form;
  }
  return f;
}

LatticeSummary intersection_lattice(const LineSet& lines) {
  const auto& ls = lines.lines();
  std::map<ProjectivePoint, std::set<std::size_t>, PointLess> incidence;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      auto& through = incidence[canonical_point(cross(ls[i], ls[j]))];
      through.insert(i);
      through.insert(j);
    }
  }
  LatticeSummary out;
  out.degree = lines.degree();
  for (const auto& [p, through] : incidence) out.points.push_back({p, static_cast<int>(through.size())});
  if (!out.pair_count_ok()) throw std::logic_error("intersection_lattice: pair count mismatch");
  return out;
}

long long lattice_tjurina(const LatticeSummary& lattice) {
  long long tau = 0;
  for (const auto& p : lattice.points) tau += static_cast<long long>(p.multiplicity - 1) * (p.multiplicity - 1);
  return tau;
}

std::string to_string(const TeraoResult& t) {
  switch (t.kind) {
    case TeraoResult::Kind::Rigid:
      return "Rigid(" + std::to_string(*t.r) + ")";
    case TeraoResult::Kind::NotCovered:
      return "NotCovered(" + std::to_string(*t.r) + ")";
    case TeraoResult::Kind::NoSolution:
      return "NoSolution";
  }
  return "?";
}

TeraoResult terao_rigidity(int d, long long tau) {
  if (d < 3) throw InputError("terao: degree must be at least 3");
  if (tau < 0) throw InputError("terao: tau must be non-negative");
  // tau(r)_max is strictly decreasing on 0 <= r < d/2, so at most one r matches.
  for (int r = 0; 2 * r < d; ++r) {
    if (dpw_tau_max(d, r) != tau) continue;
    const bool rigid = static_cast<long long>(r) * r <= d - 3;
    return {rigid ? TeraoResult::Kind::Rigid : TeraoResult::Kind::NotCovered, r};
  }
  return {TeraoResult::Kind::NoSolution, std::nullopt};
}

std::vector<IntervalRow> interval_table(int d) {
  if (d < 3) throw InputError("intervals: degree must be at least 3");
  std::vector<IntervalRow> rows;
  for (int r = 1; 2 * r <= d; ++r) {
    auto b = dpw_bounds(d, r);
    rows.push_back({r, b.tau_min, b.tau_max});
  }
  return rows;
}

LineSet parse_line_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::vector<ProjectivePoint> lines;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(strip_comment(raw));
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      throw InputError("line " + std::to_string(line_no) + ": expected 3 coefficients, got " +
                       std::to_string(tokens.size()));
    lines.push_back({parse_rational(tokens[0], line_no), parse_rational(tokens[1], line_no),
                     parse_rational(tokens[2], line_no)});
  }
  return LineSet(std::move(lines));
}

LatticeSummary parse_lattice_summary(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  LatticeSummary out;
  bool have_degree = false;
  int line_no = 0;
  auto to_int = [&line_no](const std::string& t) {
    try {
      std::size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(line_no) + ": '" + t + "' is not an integer");
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(strip_comment(raw));
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected two fields");
    if (tokens[0] == "degree") {
      if (have_degree) throw InputError("line " + std::to_string(line_no) + ": duplicate degree header");
      out.degree = to_int(tokens[1]);
      have_degree = true;
      continue;
    }
    if (!have_degree) throw InputError("line " + std::to_string(line_no) + ": missing 'degree <d>' header");
    const int mult = to_int(tokens[0]);
    const int count = to_int(tokens[1]);
    if (mult < 2 || count < 0)
      throw InputError("line " + std::to_string(line_no) + ": multiplicity must be >= 2 and count >= 0");
    for (int i = 0; i < count; ++i) out.points.push_back({std::nullopt, mult});
  }
  if (!have_degree) throw InputError("lattice file has no 'degree <d>' header");
  if (out.degree < 3) throw InputError("lattice degree must be at least 3");
  if (!out.pair_count_ok())
    throw InputError("lattice is inconsistent: sum of C(n(p),2) must equal C(d,2) = " +
                     std::to_string(dim_binom2(out.degree)));
  return out;
}

}  // namespace syzcurve
