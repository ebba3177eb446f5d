#include <algorithm>

#include "syzcurve/linalg.hpp"

namespace syzcurve {

namespace {

using IntRow = std::vector<mpz_class>;

std::vector<IntRow> clear_denominators(const Matrix<RationalField>& m) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

}  // namespace

RowEchelon<RationalField> bareiss_echelon(const Matrix<RationalField>& m) {
  auto a = clear_denominators(m);
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  mpz_class t;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t p = next;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[next]);
    const IntRow& piv = a[next];
    for (std::size_t i = next + 1; i < rows; ++i) {
      IntRow& row = a[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (piv[c]*row[j] - row[c]*piv[j]) / prev, exact by Sylvester's identity
        t = piv[c] * row[j];
        t -= row[c] * piv[j];
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv[c];
    pivots.push_back(c);
    ++next;
  }

  RowEchelon<RationalField> out;
  out.pivot_cols = std::move(pivots);
  for (std::size_t i = 0; i < next; ++i) {
    Vec<RationalField> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = mpq_class(a[i][j]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::size_t rank(const Matrix<RationalField>& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::vector<Vec<RationalField>> kernel_basis(const Matrix<RationalField>& m) {
  return detail::kernel_from_echelon(m.field(), bareiss_echelon(m), m.cols());
}

std::optional<Vec<RationalField>> solve_exact(const Matrix<RationalField>& m, const Vec<RationalField>& b) {
  auto e = bareiss_echelon(detail::augment(m, b));
  return detail::solve_from_augmented_echelon(m.field(), e, m.cols());
}

}  // namespace syzcurve
