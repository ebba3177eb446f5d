#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "syzcurve/invariants.hpp"

namespace syzcurve {

enum class Verdict { Free, NearlyFree, Neither, Smooth, PencilOfLines };
enum class TestOutcome { Free, NearlyFree, Neither };

std::string to_string(Verdict v);
std::string to_string(TestOutcome t);

struct Criteria {
  TestOutcome tau_test;
  TestOutcome ctst_test;
  TestOutcome delta_test;

  friend bool operator==(const Criteria&, const Criteria&) = default;
};

struct Classification {
  Verdict verdict = Verdict::Neither;
  std::optional<std::pair<int, int>> exponents;
  std::optional<Criteria> criteria;
  bool symmetry_flag = false;  // mdr(f) = 1
  bool verified = false;       // Saito pairing (free) or generation check (nearly free) passed
  // delta_{d-r-1} and delta_{d-r}, recorded for every classified curve.
  std::optional<long long> delta_low;
  std::optional<long long> delta_high;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Free iff 2r < d and tau = tau(r)_max; nearly free iff 2r <= d and
/// tau = tau(r)_max - 1.
TestOutcome tau_test(int d, int r, long long tau);

/// Free iff ct+st = T, nearly free iff ct+st = T+2, neither iff ct+st >= T+3.
/// ct+st = T+1 or < T cannot happen for a reduced curve and throws.
TestOutcome ctst_test(int ct, int st, int d);

/// Free iff delta_{d-r-1} >= 1; nearly free iff delta_{d-r-1} = 0 and
/// delta_{d-r} >= 2. The sharp values (1, and 2r < d, resp. 2r <= d) are
/// asserted.
template <class F>
TestOutcome delta_test(JacobianModule<F>& mod, int r) {
  const int d = mod.degree();
  const long long low = delta_dim(mod, d - r - 1, r);
  if (low >= 2)
    throw InternalInconsistency("delta_test: delta_{d-r-1} = " + std::to_string(low) + " exceeds 1");
  if (low == 1) {
    if (2 * r >= d) throw InternalInconsistency("delta_test: free verdict with 2r >= d");
    return TestOutcome::Free;
  }
  if (delta_dim(mod, d - r, r) >= 2) {
    if (2 * r > d) throw InternalInconsistency("delta_test: nearly free verdict with 2r > d");
    return TestOutcome::NearlyFree;
  }
  return TestOutcome::Neither;
}

/// rho x rho' = (b c' - b' c, c a' - c' a, a b' - a' b).
template <class F>
Triple<F> cross_product(const Triple<F>& p, const Triple<F>& q) {
  return {p[1] * q[2] - q[1] * p[2], p[2] * q[0] - q[2] * p[0], p[0] * q[1] - q[0] * p[1]};
}

/// The polynomial h with rho x rho' = h * grad f (written rho * rho'). Found
/// by an exact solve in degree deg(rho) + deg(rho') - (d-1), then verified.
template <class F>
HomogPoly<F> pairing(const Triple<F>& rho, const Triple<F>& rho2, const Gradient<F>& grad) {
  const F& k = grad.fx.field();
  const auto w = cross_product(rho, rho2);
  const int wdeg = w[0].degree();
  const int hdeg = wdeg - grad.fx.degree();
  HomogPoly<F> h(k, hdeg);
  if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) return h;
  if (hdeg < 0) throw InternalInconsistency("pairing: nonzero cross product below the degree of grad f");

  const auto basis = monomial_basis(hdeg);
  const std::size_t rows = dim_S(wdeg);
  Matrix<F> m(k, 3 * rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (int i = 0; i < 3; ++i) {
      for (const auto& [u, c] : grad[i].terms()) m(i * rows + monomial_index(basis[j] * u), j) = c;
    }
  }
  auto x = solve_exact(m, to_vector(w));
  if (!x) throw InternalInconsistency("pairing: cross product is not a multiple of grad f");
  h = HomogPoly<F>::from_coefficients(k, hdeg, *x);
  for (int i = 0; i < 3; ++i) {
    if (!(h * grad[i] == w[i])) throw InternalInconsistency("pairing: verification of h * grad f failed");
  }
  return h;
}

/// True iff rho1 * rho2 is a nonzero constant (Saito's criterion when
/// deg rho1 + deg rho2 = d - 1).
template <class F>
bool saito_verify(const Gradient<F>& grad, const Syzygy<F>& rho1, const Syzygy<F>& rho2) {
  if (rho1.degree + rho2.degree != grad.fx.degree())
    throw std::invalid_argument("saito_verify: degrees must add up to d-1");
  const auto h = pairing(rho1.comps, rho2.comps, grad);
  return h.degree() == 0 && !h.is_zero();
}

/// v(rho) = rho * rho1, the map AR(f) -> S(r-d+1).
template <class F>
HomogPoly<F> v_map(const Triple<F>& rho, const Triple<F>& rho1, const Gradient<F>& grad) {
  return pairing(rho, rho1, grad);
}

template <class F>
Triple<F> multiply(const HomogPoly<F>& g, const Triple<F>& t) {
  return {g * t[0], g * t[1], g * t[2]};
}

/// Members of the canonical basis of AR(f)_m that are independent modulo
/// S_{m-r} rho1, taken in basis order.
template <class F>
std::vector<Syzygy<F>> complement_of_multiples(JacobianModule<F>& mod, const Syzygy<F>& rho1, int m) {
  const F& k = mod.field();
  EchelonBuilder<F> span(k, 3 * dim_S(m));
  for (const auto& u : monomial_basis(m - rho1.degree)) {
    span.insert(to_vector(multiply(HomogPoly<F>::monomial(k, u, k.one()), rho1.comps)));
  }
  std::vector<Syzygy<F>> out;
  for (const auto& s : mod.syzygy_basis(m)) {
    if (span.insert(to_vector(s.comps))) out.push_back(s);
  }
  mod.log_rank("complement_" + std::to_string(m), span.rank());
  return out;
}

/// rho1 (first basis relation of degree r) and a relation of degree d-r-1
/// outside S * rho1.
template <class F>
std::pair<Syzygy<F>, Syzygy<F>> free_generators(JacobianModule<F>& mod, int r) {
  const auto& low = mod.syzygy_basis(r);
  if (low.empty()) throw std::invalid_argument("free_generators: r is not the minimal relation degree");
  auto rest = complement_of_multiples(mod, low.front(), mod.degree() - r - 1);
  if (rest.empty()) throw std::invalid_argument("free_generators: the curve is not free");
  return {low.front(), rest.front()};
}

/// Dimension of the submodule generated by `gens` in degree k.
template <class F>
std::size_t generated_dim(JacobianModule<F>& mod, const std::vector<Syzygy<F>>& gens, int k) {
  const F& field = mod.field();
  EchelonBuilder<F> span(field, 3 * dim_S(k));
  for (const auto& g : gens) {
    for (const auto& u : monomial_basis(k - g.degree)) {
      span.insert(to_vector(multiply(HomogPoly<F>::monomial(field, u, field.one()), g.comps)));
    }
  }
  mod.log_rank("generated_" + std::to_string(k), span.rank());
  return span.rank();
}

/// ar(f)'_k for a nearly free curve with exponents (r, d-r), read off the
/// resolution 0 -> S(-d+r-1) -> S(-r) + S(-d+r)^2 -> AR(f)' -> 0.
constexpr long long nearly_free_ar_prime(int d, int r, int k) {
  return 2 * dim_binom2(k - d + r + 2) + dim_binom2(k - r + 2) - dim_binom2(k - d + r + 1);
}

template <class F>
struct NearlyFreeGenerators {
  Syzygy<F> rho1, rho2, rho3;
  HomogPoly<F> ell2, ell3;  // v(rho2), v(rho3)
  GradedTable ar_prime;     // closed form from the resolution
  GradedTable generated;    // dim of the span of rho1, rho2, rho3, computed
  bool linear_forms_independent = false;
  bool generates = false;   // ar = ar' = generated on the checked range
};

/// The three generators of AR(f) for a nearly free curve with d1 = r, and a
/// check that they generate AR(f) in degrees 0..max_k.
template <class F>
NearlyFreeGenerators<F> nearly_free_generators(JacobianModule<F>& mod, int r, int max_k) {
  const int d = mod.degree();
  if (r < 1 || 2 * r > d || delta_dim(mod, d - r - 1, r) != 0)
    throw std::invalid_argument("nearly_free_generators: precondition violated, the curve is not nearly free");
  const auto& low = mod.syzygy_basis(r);
  if (low.empty()) throw std::invalid_argument("nearly_free_generators: r is not the minimal relation degree");
  auto rest = complement_of_multiples(mod, low.front(), d - r);
  if (rest.size() != 2)
    throw InternalInconsistency("nearly_free_generators: complement of S*rho1 in AR(f)_{d-r} has dimension " +
                                std::to_string(rest.size()) + ", expected 2");
  NearlyFreeGenerators<F> out{low.front(), rest[0], rest[1],
                              v_map(rest[0].comps, low.front().comps, mod.gradient()),
                              v_map(rest[1].comps, low.front().comps, mod.gradient()),
                              {"ar_prime", 0, {}},
                              {"generated", 0, {}}};
  EchelonBuilder<F> forms(mod.field(), 3);
  out.linear_forms_independent = out.ell2.degree() == 1 && out.ell3.degree() == 1 &&
                                 forms.insert(out.ell2.coefficients()) && forms.insert(out.ell3.coefficients());
  const std::vector<Syzygy<F>> gens{out.rho1, out.rho2, out.rho3};
  bool ok = true;
  for (int k = 0; k <= max_k; ++k) {
    const long long formula = nearly_free_ar_prime(d, r, k);
    const long long generated = static_cast<long long>(generated_dim(mod, gens, k));
    out.ar_prime.values.push_back(formula);
    out.generated.values.push_back(generated);
    ok = ok && formula == generated && generated == static_cast<long long>(mod.ar_dim(k));
  }
  out.generates = ok;
  return out;
}

/// Runs the three criteria on a reduced curve whose invariants are known,
/// asserts that they agree, and verifies the verdict structurally.
template <class F>
Classification classify(JacobianModule<F>& mod, const InvariantBundle& b) {
  Classification c;
  const int d = b.d;
  const int r = b.r;
  if (r == 0) {
    c.verdict = Verdict::PencilOfLines;
    c.verified = true;
    return c;
  }
  if (b.tau == 0) {
    c.verdict = Verdict::Smooth;
    c.verified = r == d - 1 && !b.ct && b.st == b.T + 1;
    if (!c.verified) throw InternalInconsistency("classify: smooth curve with unexpected mdr/ct/st");
    return c;
  }
  if (!b.ct) throw InternalInconsistency("classify: singular curve agrees with the smooth Hilbert function");

  const Criteria crit{tau_test(d, r, b.tau), ctst_test(*b.ct, b.st, d), delta_test(mod, r)};
  c.criteria = crit;
  c.delta_low = delta_dim(mod, d - r - 1, r);
  c.delta_high = delta_dim(mod, d - r, r);
  if (crit.tau_test != crit.ctst_test || crit.tau_test != crit.delta_test) {
    std::ostringstream msg;
    msg << "classify: criteria disagree (tau_test=" << to_string(crit.tau_test)
        << ", ctst_test=" << to_string(crit.ctst_test) << ", delta_test=" << to_string(crit.delta_test)
        << ") for d=" << d << " r=" << r << " tau=" << b.tau << " ct=" << *b.ct << " st=" << b.st;
    throw InternalInconsistency(msg.str());
  }
  c.symmetry_flag = r == 1;
  const long long sq = static_cast<long long>(d - 1) * (d - 1);
  switch (crit.tau_test) {
    case TestOutcome::Free: {
      c.verdict = Verdict::Free;
      c.exponents = {r, d - 1 - r};
      if (sq - static_cast<long long>(r) * (d - 1 - r) != b.tau)
        throw InternalInconsistency("classify: free exponents do not reproduce tau");
      auto [rho1, rho2] = free_generators(mod, r);
      c.verified = saito_verify(mod.gradient(), rho1, rho2);
      break;
    }
    case TestOutcome::NearlyFree: {
      c.verdict = Verdict::NearlyFree;
      c.exponents = {r, d - r};
      if (sq - static_cast<long long>(r) * (d - r - 1) - 1 != b.tau)
        throw InternalInconsistency("classify: nearly free exponents do not reproduce tau");
      if (*c.delta_high != 2) throw InternalInconsistency("classify: nearly free with delta_{d-r} != 2");
      auto gens = nearly_free_generators(mod, r, d + 2);
      c.verified = gens.generates && gens.linear_forms_independent;
      break;
    }
    case TestOutcome::Neither:
      c.verdict = Verdict::Neither;
      c.verified = true;
      break;
  }
  if (r == 1 && c.verdict == Verdict::Neither)
    throw InternalInconsistency("classify: mdr = 1 but the curve is neither free nor nearly free");
  return c;
}

/// Re-checks the inequalities every reduced curve must satisfy. Throws
/// InternalInconsistency naming the first violation.
void check_bundle(const InvariantBundle& b);

}  // namespace syzcurve
