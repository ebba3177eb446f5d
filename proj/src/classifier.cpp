#include "syzcurve/classifier.hpp"

namespace syzcurve {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Free:
      return "Free";
    case Verdict::NearlyFree:
      return "NearlyFree";
    case Verdict::Neither:
      return "Neither";
    case Verdict::Smooth:
      return "Smooth";
    case Verdict::PencilOfLines:
      return "PencilOfLines";
  }
  return "?";
}

std::string to_string(TestOutcome t) {
  switch (t) {
    case TestOutcome::Free:
      return "Free";
    case TestOutcome::NearlyFree:
      return "NearlyFree";
    case TestOutcome::Neither:
      return "Neither";
  }
  return "?";
}

TestOutcome tau_test(int d, int r, long long tau) {
  const long long max = dpw_tau_max(d, r);
  if (2 * r < d && tau == max) return TestOutcome::Free;
  if (2 * r <= d && tau == max - 1) return TestOutcome::NearlyFree;
  return TestOutcome::Neither;
}

TestOutcome ctst_test(int ct, int st, int d) {
  const int T = socle_degree(d);
  const int sum = ct + st;
  if (sum < T || sum == T + 1)
    throw InternalInconsistency("ctst_test: ct + st = " + std::to_string(sum) + " with T = " + std::to_string(T));
  if (sum == T) return TestOutcome::Free;
  if (sum == T + 2) return TestOutcome::NearlyFree;
  return TestOutcome::Neither;
}

void check_bundle(const InvariantBundle& b) {
  auto fail = [&b](const std::string& what) {
    throw InternalInconsistency("invariant violated: " + what + " (d=" + std::to_string(b.d) + ", r=" +
                                std::to_string(b.r) + ", tau=" + std::to_string(b.tau) + ")");
  };
  if (b.r > b.d - 1) fail("mdr exceeds d-1");
  if (b.tau < 0) fail("negative tau");
  if (b.d >= 3 && b.r >= 1 && 2 * b.r <= b.d) {
    if (b.tau < b.bounds.tau_min || b.tau > b.bounds.tau_max) fail("tau outside [tau(r)_min, tau(r)_max]");
  }
  if (b.ct) {
    if (*b.ct < b.r + b.d - 2) fail("ct < mdr + d - 2");
    if (b.r < b.d - 1 && *b.ct != b.r + b.d - 2) fail("ct != mdr + d - 2 although mdr < d - 1");
    if (*b.ct + b.st < b.T) fail("ct + st < T");
  }
  if (!is_unimodal(b.n, b.T)) fail("saturation defects are not unimodal");
}

}  // namespace syzcurve
