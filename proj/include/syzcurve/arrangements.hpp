#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzcurve/polyring.hpp"

namespace syzcurve {

using ProjectivePoint = std::array<mpq_class, 3>;

/// Distinct lines a x + b y + c z = 0 with rational coefficients, d >= 3.
class LineSet {
 public:
  explicit LineSet(std::vector<ProjectivePoint> lines);

  const std::vector<ProjectivePoint>& lines() const noexcept { return lines_; }
  int degree() const noexcept { return static_cast<int>(lines_.size()); }

 private:
  std::vector<ProjectivePoint> lines_;
};

struct LatticePoint {
  std::optional<ProjectivePoint> coords;  // absent when the summary came from a file
  int multiplicity;
};

/// Multiple points of a line arrangement with their multiplicities.
struct LatticeSummary {
  int degree = 0;
  std::vector<LatticePoint> points;

  /// sum over points of C(n(p), 2) == C(d, 2): each pair of lines meets once.
  bool pair_count_ok() const;
};

/// Scales so that the first nonzero coordinate is 1.
ProjectivePoint canonical_point(ProjectivePoint p);

HomogPoly<RationalField> arrangement_poly(const LineSet& lines);
LatticeSummary intersection_lattice(const LineSet& lines);

/// tau = sum over multiple points of (n(p) - 1)^2.
long long lattice_tjurina(const LatticeSummary& lattice);

struct TeraoResult {
  enum class Kind { Rigid, NotCovered, NoSolution };
  Kind kind;
  std::optional<int> r;

  friend bool operator==(const TeraoResult&, const TeraoResult&) = default;
};

std::string to_string(const TeraoResult& t);

/// Looks for the unique 0 <= r < d/2 with tau = (d-1)(d-r-1) + r^2. It is
/// Rigid when additionally r^2 <= d-3: then tau(r)_max lies below every
/// value of the next interval, so tau alone pins r.
TeraoResult terao_rigidity(int d, long long tau);

struct IntervalRow {
  int r;
  long long tau_min;
  long long tau_max;
};

/// Rows r = 1..floor(d/2); the r = d/2 row has its maximum lowered by one.
std::vector<IntervalRow> interval_table(int d);

/// One line per projective line: three rationals, '#' starts a comment.
LineSet parse_line_set(std::string_view text);

/// "degree <d>" header, then rows "<multiplicity> <count>".
LatticeSummary parse_lattice_summary(std::string_view text);

}  // namespace syzcurve
