#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "syzcurve/field.hpp"
#include "syzcurve/matrix.hpp"

namespace syzcurve {

template <class F>
using Vec = std::vector<typename F::Element>;

/// Row echelon form with the pivot columns it was built on. Rows are
/// normalized (pivot entry 1) for the generic path.
template <class F>
struct RowEchelon {
  std::vector<Vec<F>> rows;
  std::vector<std::size_t> pivot_cols;
};

/// Gaussian elimination. Pivot: for each column left to right, the first
/// remaining row with a nonzero entry. Deterministic for fixed input.
template <class F>
RowEchelon<F> row_echelon(const Matrix<F>& m) {
  const F& k = m.field();
  std::vector<Vec<F>> work;
  work.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) work.emplace_back(m.row(r).begin(), m.row(r).end());

  RowEchelon<F> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < work.size(); ++c) {
    std::size_t p = next;
    while (p < work.size() && k.is_zero(work[p][c])) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[next]);
    auto& piv = work[next];
    auto scale = k.inv(piv[c]);
    for (std::size_t j = c; j < piv.size(); ++j) piv[j] = k.mul(piv[j], scale);
    for (std::size_t i = next + 1; i < work.size(); ++i) {
      if (k.is_zero(work[i][c])) continue;
      auto coef = work[i][c];
      for (std::size_t j = c; j < piv.size(); ++j) work[i][j] = k.sub(work[i][j], k.mul(coef, piv[j]));
    }
    out.pivot_cols.push_back(c);
    ++next;
  }
  work.resize(next);
  out.rows = std::move(work);
  return out;
}

namespace detail {

// Solves the echelon system for the pivot variables, given fixed values for
// the free variables already stored in x. Pivot entries need not be 1.
template <class F>
void back_substitute(const F& k, const RowEchelon<F>& e, Vec<F>& x) {
  for (std::size_t i = e.rows.size(); i-- > 0;) {
    const auto& row = e.rows[i];
    std::size_t pc = e.pivot_cols[i];
    auto s = k.zero();
    for (std::size_t j = pc + 1; j < x.size(); ++j) {
      if (!k.is_zero(row[j]) && !k.is_zero(x[j])) s = k.add(s, k.mul(row[j], x[j]));
    }
    x[pc] = k.div(k.neg(s), row[pc]);
  }
}

template <class F>
std::vector<Vec<F>> kernel_from_echelon(const F& k, const RowEchelon<F>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<F> x(cols, k.zero());
    x[f] = k.one();
    back_substitute(k, e, x);
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class F>
std::optional<Vec<F>> solve_from_augmented_echelon(const F& k, const RowEchelon<F>& e, std::size_t cols) {
  // cols = number of unknowns; the augmented column index is cols.
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;
  Vec<F> x(cols + 1, k.zero());
  x[cols] = k.neg(k.one());  // moves b to the left-hand side
  back_substitute(k, e, x);
  x.resize(cols);
  return x;
}

template <class F>
Matrix<F> augment(const Matrix<F>& m, const Vec<F>& b) {
  Matrix<F> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  return aug;
}

}  // namespace detail

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_echelon(m).pivot_cols.size();
}

/// Basis of the right null space. The vector for free column j has a 1 at j
/// and 0 at every other free column, so the basis is canonical.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  return detail::kernel_from_echelon(m.field(), row_echelon(m), m.cols());
}

/// Some x with m*x = b (free variables set to 0), or nullopt if inconsistent.
template <class F>
std::optional<Vec<F>> solve_exact(const Matrix<F>& m, const Vec<F>& b) {
  auto e = row_echelon(detail::augment(m, b));
  return detail::solve_from_augmented_echelon(m.field(), e, m.cols());
}

// Over Q the same three operations run on fraction-free (Bareiss)
// elimination of the row-wise denominator-cleared integer matrix.
RowEchelon<RationalField> bareiss_echelon(const Matrix<RationalField>& m);
std::size_t rank(const Matrix<RationalField>& m);
std::vector<Vec<RationalField>> kernel_basis(const Matrix<RationalField>& m);
std::optional<Vec<RationalField>> solve_exact(const Matrix<RationalField>& m, const Vec<RationalField>& b);

template <class F>
Vec<F> multiply(const Matrix<F>& m, const Vec<F>& x) {
  const F& k = m.field();
  Vec<F> y(m.rows(), k.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!k.is_zero(m(r, c)) && !k.is_zero(x[c])) y[r] = k.add(y[r], k.mul(m(r, c), x[c]));
    }
  }
  return y;
}

/// Incrementally built echelon basis of a subspace of F^width.
template <class F>
class EchelonBuilder {
 public:
  using Elem = typename F::Element;

  EchelonBuilder(F field, std::size_t width)
      : field_(std::move(field)), width_(width), pivot_row_(width, kNone) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Full reduction: afterwards v is zero on every pivot column.
  void reduce(Vec<F>& v) const {
    const F& k = field_;
    for (std::size_t c = 0; c < width_; ++c) {
      if (k.is_zero(v[c]) || pivot_row_[c] == kNone) continue;
      auto coef = v[c];
      const auto& row = rows_[pivot_row_[c]];
      for (std::size_t j = c; j < width_; ++j) {
        if (!k.is_zero(row[j])) v[j] = k.sub(v[j], k.mul(coef, row[j]));
      }
    }
  }

  /// Adds v if it is independent of the current rows.
  bool insert(Vec<F> v) {
    reduce(v);
    std::size_t lead = 0;
    while (lead < width_ && field_.is_zero(v[lead])) ++lead;
    if (lead == width_) return false;
    auto scale = field_.inv(v[lead]);
    for (std::size_t j = lead; j < width_; ++j) v[j] = field_.mul(v[j], scale);
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    for (const auto& e : v) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  F field_;
  std::size_t width_;
  std::vector<std::size_t> pivot_row_;
  std::vector<Vec<F>> rows_;
};

}  // namespace syzcurve
