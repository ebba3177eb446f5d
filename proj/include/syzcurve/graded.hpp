#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syzcurve/errors.hpp"
#include "syzcurve/linalg.hpp"
#include "syzcurve/polyring.hpp"

namespace syzcurve {

template <class F>
using Triple = std::array<HomogPoly<F>, 3>;

/// A Jacobian relation (a, b, c) of degree m: a f_x + b f_y + c f_z = 0.
template <class F>
struct Syzygy {
  int degree;
  Triple<F> comps;

  const HomogPoly<F>& a() const { return comps[0]; }
  const HomogPoly<F>& b() const { return comps[1]; }
  const HomogPoly<F>& c() const { return comps[2]; }
};

/// Coordinates of a triple in S_m^3: blocks a, b, c, each in monomial order.
template <class F>
Vec<F> to_vector(const Triple<F>& t) {
  Vec<F> out;
  for (const auto& p : t) {
    auto v = p.coefficients();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

template <class F>
Triple<F> triple_from_vector(const F& field, int degree, const Vec<F>& v) {
  const std::size_t n = dim_S(degree);
  Triple<F> t{HomogPoly<F>(field, degree), HomogPoly<F>(field, degree), HomogPoly<F>(field, degree)};
  for (int i = 0; i < 3; ++i) {
    t[i] = HomogPoly<F>::from_coefficients(field, degree, Vec<F>(v.begin() + i * n, v.begin() + (i + 1) * n));
  }
  return t;
}

template <class F>
HomogPoly<F> apply_gradient(const Triple<F>& t, const Gradient<F>& g) {
  return t[0] * g.fx + t[1] * g.fy + t[2] * g.fz;
}

/// The degree-K piece of the ideal generated by a list of homogeneous
/// polynomials, held in echelon form.
///
/// Rows u*g are laid out in the canonical monomial order. The first row to
/// claim a given leading monomial is kept as a sparse, unreduced pivot row;
/// the remaining rows are reduced against those and echelonized densely.
/// Because u*g has the same support size as g, reductions against sparse
/// pivots cost O(|g|) instead of O(dim S_K).
template <class F>
class MacaulaySpan {
 public:
  using Elem = typename F::Element;

  MacaulaySpan(const F& field, const std::vector<HomogPoly<F>>& generators, int degree)
      : field_(field), degree_(degree), n_(dim_S(degree)), pivot_(n_) {
    std::vector<SparseRow> remainder;
    for (const auto& g : generators) {
      const int shift = degree - g.degree();
      if (g.is_zero() || shift < 0) continue;
      const Elem lead_inv = field_.inv(g.terms().begin()->second);
      for (const auto& u : monomial_basis(shift)) {
        SparseRow row;
        row.cols.reserve(g.term_count());
        row.vals.reserve(g.term_count());
        for (const auto& [m, c] : g.terms()) {
          row.cols.push_back(static_cast<std::uint32_t>(monomial_index(u * m)));
          row.vals.push_back(c);
        }
        Pivot& p = pivot_[row.cols.front()];
        if (p.kind == Kind::None) {
          for (auto& v : row.vals) v = field_.mul(v, lead_inv);
          p = {Kind::Sparse, static_cast<std::uint32_t>(sparse_.size())};
          sparse_.push_back(std::move(row));
        } else {
          remainder.push_back(std::move(row));
        }
      }
    }
    for (const auto& row : remainder) {
      Vec<F> v(n_, field_.zero());
      for (std::size_t i = 0; i < row.cols.size(); ++i) v[row.cols[i]] = row.vals[i];
      reduce(v);
      std::size_t lead = 0;
      while (lead < n_ && field_.is_zero(v[lead])) ++lead;
      if (lead == n_) continue;
      const Elem s = field_.inv(v[lead]);
      for (std::size_t j = lead; j < n_; ++j) {
        if (!field_.is_zero(v[j])) v[j] = field_.mul(v[j], s);
      }
      pivot_[lead] = {Kind::Dense, static_cast<std::uint32_t>(dense_.size())};
      dense_.push_back(std::move(v));
    }
  }

  int degree() const noexcept { return degree_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t rank() const noexcept { return sparse_.size() + dense_.size(); }

  /// Normal form: afterwards v vanishes on every pivot column.
  void reduce(Vec<F>& v) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (field_.is_zero(v[c])) continue;
      const Pivot& p = pivot_[c];
      if (p.kind == Kind::None) continue;
      const Elem coef = v[c];
      if (p.kind == Kind::Sparse) {
        const SparseRow& row = sparse_[p.index];
        for (std::size_t i = 0; i < row.cols.size(); ++i) {
          v[row.cols[i]] = field_.sub(v[row.cols[i]], field_.mul(coef, row.vals[i]));
        }
      } else {
        const Vec<F>& row = dense_[p.index];
        for (std::size_t j = c; j < n_; ++j) {
          if (!field_.is_zero(row[j])) v[j] = field_.sub(v[j], field_.mul(coef, row[j]));
        }
      }
    }
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    for (const auto& e : v) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  /// Columns that carry no pivot; normal forms live on these coordinates.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c) {
      if (pivot_[c].kind == Kind::None) out.push_back(c);
    }
    return out;
  }

 private:
  enum class Kind : std::uint8_t { None, Sparse, Dense };
  struct Pivot {
    Kind kind = Kind::None;
    std::uint32_t index = 0;
  };
  struct SparseRow {
    std::vector<std::uint32_t> cols;
    std::vector<Elem> vals;
  };

  F field_;
  int degree_;
  std::size_t n_;
  std::vector<Pivot> pivot_;
  std::vector<SparseRow> sparse_;
  std::vector<Vec<F>> dense_;
};

enum class Reducedness { Reduced, NonReduced, PencilOfLines };

std::string to_string(Reducedness r);

/// Where the Hilbert function of M(f) was found constant.
struct Stabilization {
  long long value;  // the constant m(f)_k on the window
  int window_start;
  int window_end;
};

/// Every rank a computation touched, keyed by a description of the matrix.
/// Used to compare runs over different fields.
using RankLog = std::map<std::string, std::size_t>;

/// Graded pieces of the Jacobian ideal J_f and of the relation module AR(f)
/// for one curve over one field. Results are cached per degree.
template <class F>
class JacobianModule {
 public:
  using Elem = typename F::Element;

  explicit JacobianModule(HomogPoly<F> f)
      : f_(std::move(f)), grad_(partials(f_)), generators_{grad_.fx, grad_.fy, grad_.fz} {
    if (f_.degree() < 1) throw std::invalid_argument("JacobianModule: degree must be at least 1");
  }

  const F& field() const noexcept { return f_.field(); }
  const HomogPoly<F>& poly() const noexcept { return f_; }
  const Gradient<F>& gradient() const noexcept { return grad_; }
  int degree() const noexcept { return f_.degree(); }
  const RankLog& rank_log() const noexcept { return log_; }
  void log_rank(const std::string& key, std::size_t value) { log_[key] = value; }

  /// J_K = S_{K-d+1} f_x + S_{K-d+1} f_y + S_{K-d+1} f_z inside S_K.
  const MacaulaySpan<F>& jacobian_span(int K) {
    auto it = spans_.find(K);
    if (it == spans_.end()) {
      it = spans_.emplace(K, std::make_unique<MacaulaySpan<F>>(field(), generators_, K)).first;
      log_rank("J_" + std::to_string(K), it->second->rank());
    }
    return *it->second;
  }

  std::size_t jacobian_rank(int K) {
    if (K < degree() - 1) return 0;
    return jacobian_span(K).rank();
  }

  /// Matrix of (a,b,c) -> a f_x + b f_y + c f_z from S_k^3 to S_{k+d-1}.
  Matrix<F> jacobian_matrix(int k) const {
    const int target = k + degree() - 1;
    const std::size_t n = dim_S(k);
    Matrix<F> m(field(), dim_S(target), 3 * n);
    const auto basis = monomial_basis(k);
    for (int block = 0; block < 3; ++block) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [u, c] : grad_[block].terms()) m(monomial_index(basis[j] * u), block * n + j) = c;
      }
    }
    return m;
  }

  /// ar(f)_k = dim AR(f)_k.
  std::size_t ar_dim(int k) {
    if (k < 0) return 0;
    return 3 * dim_S(k) - jacobian_rank(k + degree() - 1);
  }

  /// m(f)_k = dim M(f)_k = dim S_k - dim J_k.
  std::size_t milnor_dim(int k) {
    if (k < 0) return 0;
    return dim_S(k) - jacobian_rank(k);
  }

  /// Canonical basis of AR(f)_k from the null space of jacobian_matrix(k).
  /// Every returned relation is re-verified by expansion.
  const std::vector<Syzygy<F>>& syzygy_basis(int k) {
    auto it = syzygies_.find(k);
    if (it != syzygies_.end()) return it->second;
    std::vector<Syzygy<F>> out;
    if (k >= 0) {
      const auto m = jacobian_matrix(k);
      const auto kernel = kernel_basis(m);
      log_rank("kernel_" + std::to_string(k), m.cols() - kernel.size());
      for (const auto& v : kernel) {
        Syzygy<F> s{k, triple_from_vector(field(), k, v)};
        if (!apply_gradient(s.comps, grad_).is_zero())
          throw InternalInconsistency("syzygy_basis: kernel vector fails a*f_x + b*f_y + c*f_z = 0");
        out.push_back(std::move(s));
      }
    }
    return syzygies_.emplace(k, std::move(out)).first->second;
  }

  /// Smallest k with AR(f)_k != 0. The Koszul relations bound it by d-1.
  int mdr() {
    for (int k = 0; k < degree(); ++k) {
      if (ar_dim(k) > 0) return k;
    }
    throw InternalInconsistency("mdr: no relation found up to degree d-1, but Koszul relations live there");
  }

  /// Finds a window of width 4 starting at 3d-5 (shifted by d up to three
  /// times) on which m(f)_k is constant. nullopt means the Hilbert function
  /// keeps moving, i.e. the singular locus is not finite.
  const std::optional<Stabilization>& stabilization() {
    if (stabilization_checked_) return stabilization_;
    stabilization_checked_ = true;
    const int d = degree();
    for (int attempt = 0; attempt <= 3; ++attempt) {
      const int start = 3 * d - 5 + attempt * d;
      const int end = start + 3;
      std::vector<long long> window;
      for (int k = start; k <= end; ++k) window.push_back(static_cast<long long>(milnor_dim(k)));
      bool constant = true;
      bool increasing = true;
      for (std::size_t i = 1; i < window.size(); ++i) {
        constant = constant && window[i] == window[0];
        increasing = increasing && window[i] > window[i - 1];
      }
      if (constant) {
        stabilization_ = Stabilization{window[0], start, end};
        break;
      }
      if (increasing) break;  // linear growth: one-dimensional singular locus
    }
    return stabilization_;
  }

  /// Non-reduced curves have a 1-dimensional singular locus, so their Milnor
  /// algebra never stabilizes. Among reduced curves, a constant relation
  /// (ar(f)_0 > 0) means f involves only two variables after a linear change
  /// of coordinates: lines through one point.
  Reducedness reducedness_check() {
    if (!stabilization()) return Reducedness::NonReduced;
    return ar_dim(0) > 0 ? Reducedness::PencilOfLines : Reducedness::Reduced;
  }

 private:
  HomogPoly<F> f_;
  Gradient<F> grad_;
  std::vector<HomogPoly<F>> generators_;
  std::map<int, std::unique_ptr<MacaulaySpan<F>>> spans_;
  std::map<int, std::vector<Syzygy<F>>> syzygies_;
  std::optional<Stabilization> stabilization_;
  bool stabilization_checked_ = false;
  RankLog log_;
};

}  // namespace syzcurve
