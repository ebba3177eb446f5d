#include "syzcurve/invariants.hpp"

namespace syzcurve {

std::string to_string(Reducedness r) {
  switch (r) {
    case Reducedness::Reduced:
      return "Reduced";
    case Reducedness::NonReduced:
      return "NonReduced";
    case Reducedness::PencilOfLines:
      return "PencilOfLines";
  }
  return "?";
}

long long smooth_reference(int d, int k) {
  if (d < 2) throw std::invalid_argument("smooth_reference: degree must be at least 2");
  if (k < 0) return 0;
  // Inclusion-exclusion over the three exponents exceeding d-2.
  static constexpr long long kChoose3[] = {1, 3, 3, 1};
  long long total = 0;
  for (int i = 0; i <= 3; ++i) {
    const long long term = dim_binom2(static_cast<long long>(k) - static_cast<long long>(i) * (d - 1) + 2);
    total += (i % 2 == 0 ? 1 : -1) * kChoose3[i] * term;
  }
  return total;
}

DpwBounds dpw_bounds(int d, int r) {
  if (d < 3 || r < 1 || r > d - 1) throw std::invalid_argument("dpw_bounds: need d >= 3 and 1 <= r <= d-1");
  DpwBounds b{static_cast<long long>(d - 1) * (d - r - 1), dpw_tau_max(d, r)};
  if (d % 2 == 0 && 2 * r == d) b.tau_max -= 1;
  return b;
}

long long defect(int d, int r, long long tau) { return dpw_tau_max(d, r) - tau; }

bool is_unimodal(const GradedTable& n, int T) {
  const int mid = T / 2;
  auto value = [&n](int j) { return j >= n.start && j < n.end() ? n.at(j) : 0; };
  for (int j = 0; j <= T; ++j) {
    if (value(j) < 0) return false;
  }
  for (int j = 1; j <= mid; ++j) {
    if (value(j) < value(j - 1)) return false;
  }
  for (int j = mid + 1; j <= T; ++j) {
    if (value(j) > value(j - 1)) return false;
  }
  return true;
}

}  // namespace syzcurve
