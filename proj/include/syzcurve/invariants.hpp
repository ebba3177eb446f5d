#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzcurve/graded.hpp"

namespace syzcurve {

// Two binomials, never to be confused:
//   dim_binom2(n) = n(n-1)/2 clamped to 0 for n < 2. Counts monomials:
//                   dim S_m = dim_binom2(m + 2).
//   alg_binom2(n) = n(n-1)/2 as a polynomial in n, for every integer n.
//                   Used for Euler characteristics, where negative
//                   arguments are meaningful.
constexpr long long dim_binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr long long alg_binom2(long long n) { return n * (n - 1) / 2; }

/// m(f_s)_k for a smooth curve of degree d: the coefficient of t^k in
/// (1 + t + ... + t^{d-2})^3.
long long smooth_reference(int d, int k);

/// T = 3(d-2), the socle degree of the Milnor algebra of a smooth curve.
constexpr int socle_degree(int d) { return 3 * (d - 2); }

struct DpwBounds {
  long long tau_min;
  long long tau_max;  // already lowered by one when d is even and r = d/2

  friend bool operator==(const DpwBounds&, const DpwBounds&) = default;
};

/// tau(r)_min = (d-1)(d-r-1), tau(r)_max = (d-1)(d-r-1) + r^2.
DpwBounds dpw_bounds(int d, int r);
constexpr long long dpw_tau_max(int d, int r) {
  return static_cast<long long>(d - 1) * (d - r - 1) + static_cast<long long>(r) * r;
}
/// e(f) = tau(r)_max - tau (uncapped tau_max).
long long defect(int d, int r, long long tau);

/// A graded dimension table k -> value for k = start, start+1, ...
struct GradedTable {
  std::string quantity;
  int start = 0;
  std::vector<long long> values;

  long long at(int k) const {
    if (k < start || k >= start + static_cast<int>(values.size())) throw std::out_of_range(quantity + " table index");
    return values[static_cast<std::size_t>(k - start)];
  }
  int end() const { return start + static_cast<int>(values.size()); }
  friend bool operator==(const GradedTable&, const GradedTable&) = default;
};

/// Global Tjurina number: the stable value of m(f)_k.
template <class F>
long long tjurina(JacobianModule<F>& mod) {
  const auto& s = mod.stabilization();
  if (!s) throw InputError("Milnor algebra does not stabilize: the curve is not reduced");
  return s->value;
}

struct Thresholds {
  std::optional<int> ct;  // nullopt encodes infinity (smooth curve)
  int st;
};

/// ct = max q with m(f)_k = m(f_s)_k for all k <= q; st = min q with
/// m(f)_k = tau for all k >= q, scanned downward from the stable window.
template <class F>
Thresholds thresholds(JacobianModule<F>& mod, long long tau) {
  const int d = mod.degree();
  const int T = socle_degree(d);
  Thresholds out{std::nullopt, 0};
  for (int k = 0; k <= T + 1; ++k) {
    if (static_cast<long long>(mod.milnor_dim(k)) != smooth_reference(d, k)) {
      out.ct = k - 1;
      break;
    }
  }
  const auto& s = mod.stabilization();
  if (!s) throw InputError("thresholds: the curve is not reduced");
  int k = s->window_start;
  while (k > 0 && static_cast<long long>(mod.milnor_dim(k - 1)) == tau) --k;
  out.st = k;
  return out;
}

/// n(f)_j = dim N(f)_j from the Euler characteristic of the bundle of
/// logarithmic vector fields:
///   n_j = ar_{j-d+1} + ar_{2d-5-j} - [3 C(j-d+3, 2) - C(j+2, 2) + tau]
/// with ar clamped to 0 in negative degrees and C the signed alg_binom2.
template <class F>
long long n_dim(JacobianModule<F>& mod, int j, long long tau) {
  const int d = mod.degree();
  if (j < 0 || j > socle_degree(d)) return 0;
  const long long h0 = static_cast<long long>(mod.ar_dim(j - d + 1));
  const long long h2 = static_cast<long long>(mod.ar_dim(2 * d - 5 - j));
  const long long chi = 3 * alg_binom2(j - d + 3) - alg_binom2(j + 2) + tau;
  const long long n = h0 + h2 - chi;
  if (n < 0)
    throw InternalInconsistency("n_dim: negative saturation defect " + std::to_string(n) + " at degree " +
                                std::to_string(j));
  return n;
}

/// Brute-force dim I_{f,j} - dim J_{f,j}, where the saturation is
/// I_{f,j} = { g in S_j : x^e g, y^e g, z^e g in J_{f,j+e} }, with e raised
/// from max(1, T+1-j) until the subspace repeats for two consecutive e.
template <class F>
long long n_dim_saturation_oracle(JacobianModule<F>& mod, int j) {
  if (j < 0) return 0;
  const F& k = mod.field();
  const int T = socle_degree(mod.degree());
  const auto basis = monomial_basis(j);
  const std::size_t n = basis.size();

  // Canonical echelon basis of the saturation piece for exponent e.
  auto saturation_piece = [&](int e) {
    const auto& span = mod.jacobian_span(j + e);
    const auto free_cols = span.free_columns();
    const std::size_t q = free_cols.size();
    Matrix<F> m(k, 3 * q, n);
    for (std::size_t col = 0; col < n; ++col) {
      for (int var = 0; var < 3; ++var) {
        Monomial shift{var == 0 ? e : 0, var == 1 ? e : 0, var == 2 ? e : 0};
        Vec<F> v(span.ambient_dim(), k.zero());
        v[monomial_index(basis[col] * shift)] = k.one();
        span.reduce(v);
        for (std::size_t i = 0; i < q; ++i) m(var * q + i, col) = v[free_cols[i]];
      }
    }
    auto kernel = kernel_basis(m);
    mod.log_rank("saturation_" + std::to_string(j) + "_" + std::to_string(e), n - kernel.size());
    return kernel;
  };

  int e = std::max(1, T + 1 - j);
  auto previous = saturation_piece(e);
  for (;;) {
    ++e;
    auto current = saturation_piece(e);
    bool same = current.size() == previous.size();
    for (std::size_t i = 0; same && i < current.size(); ++i) {
      for (std::size_t c = 0; same && c < n; ++c) same = k.equal(current[i][c], previous[i][c]);
    }
    if (same) break;
    previous = std::move(current);
  }
  return static_cast<long long>(previous.size()) - static_cast<long long>(mod.jacobian_rank(j));
}

/// delta(f)_k = dim AR(f)_k / S_{k-r} rho_1 = ar(f)_k - dim S_{k-r}.
template <class F>
long long delta_dim(JacobianModule<F>& mod, int k, int r) {
  const long long v = static_cast<long long>(mod.ar_dim(k)) - dim_binom2(k - r + 2);
  if (v < 0) throw InternalInconsistency("delta_dim: S*rho_1 larger than AR(f) in degree " + std::to_string(k));
  return v;
}

/// Everything derived from the Hilbert functions of M(f) and AR(f) for a
/// reduced, non-pencil curve.
struct InvariantBundle {
  int d = 0;
  int r = 0;
  long long tau = 0;
  std::optional<int> ct;
  int st = 0;
  int T = 0;
  DpwBounds bounds{};
  long long e_defect = 0;
  GradedTable ar, m, n, delta;

  friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

/// Chain 0 <= n_0 <= ... <= n_{floor(T/2)} >= ... >= n_T >= 0.
bool is_unimodal(const GradedTable& n, int T);

/// Fills the bundle. Tables ar, m, delta run over k = 0..max_k; n over 0..T.
template <class F>
InvariantBundle compute_invariants(JacobianModule<F>& mod, int max_k) {
  InvariantBundle b;
  b.d = mod.degree();
  b.T = socle_degree(b.d);
  b.tau = tjurina(mod);
  b.r = mod.mdr();
  auto th = thresholds(mod, b.tau);
  b.ct = th.ct;
  b.st = th.st;
  if (b.d >= 3 && b.r >= 1 && b.r <= b.d - 1) {
    b.bounds = dpw_bounds(b.d, b.r);
    b.e_defect = defect(b.d, b.r, b.tau);
  }
  b.ar = {"ar", 0, {}};
  b.m = {"m", 0, {}};
  b.delta = {"delta", 0, {}};
  for (int k = 0; k <= max_k; ++k) {
    b.ar.values.push_back(static_cast<long long>(mod.ar_dim(k)));
    b.m.values.push_back(static_cast<long long>(mod.milnor_dim(k)));
    b.delta.values.push_back(delta_dim(mod, k, b.r));
  }
  b.n = {"n", 0, {}};
  for (int j = 0; j <= b.T; ++j) b.n.values.push_back(n_dim(mod, j, b.tau));
  return b;
}

}  // namespace syzcurve
