#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "syzcurve/field.hpp"

namespace syzcurve {

/// x^i y^j z^k.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }
  Monomial operator*(const Monomial& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: lexicographic on (i, j, k), largest first. Every matrix
/// row/column layout in the library follows it.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return std::tie(a.x, a.y, a.z) > std::tie(b.x, b.y, b.z);
  }
};

/// dim S_m = (m+1)(m+2)/2, and 0 for m < 0.
constexpr std::size_t dim_S(long long m) {
  return m < 0 ? 0 : static_cast<std::size_t>((m + 1) * (m + 2) / 2);
}

/// Position of a degree-m monomial in monomial_basis(m).
constexpr std::size_t monomial_index(const Monomial& u) {
  const long long rest = u.y + u.z;  // m - i
  return static_cast<std::size_t>(rest * (rest + 1) / 2 + (rest - u.y));
}

std::vector<Monomial> monomial_basis(int m);

std::string to_string(const Monomial& u);

/// A homogeneous polynomial in x, y, z with coefficients in F. Only nonzero
/// coefficients are stored; the zero polynomial keeps its declared degree
/// (which may be negative).
template <class F>
class HomogPoly {
 public:
  using Elem = typename F::Element;
  using Terms = std::map<Monomial, Elem, MonomialOrder>;

  HomogPoly(F field, int degree) : field_(std::move(field)), degree_(degree) {}

  static HomogPoly monomial(F field, const Monomial& u, Elem coeff) {
    HomogPoly p(std::move(field), u.degree());
    p.add_term(u, std::move(coeff));
    return p;
  }

  const F& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  Elem coefficient(const Monomial& u) const {
    auto it = terms_.find(u);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Monomial& u, const Elem& c) {
    if (u.degree() != degree_) throw std::invalid_argument("HomogPoly: term degree does not match polynomial degree");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  HomogPoly& operator+=(const HomogPoly& o) {
    check_same_degree(o);
    for (const auto& [u, c] : o.terms_) add_term(u, c);
    return *this;
  }
  HomogPoly& operator-=(const HomogPoly& o) {
    check_same_degree(o);
    for (const auto& [u, c] : o.terms_) add_term(u, field_.neg(c));
    return *this;
  }
  friend HomogPoly operator+(HomogPoly a, const HomogPoly& b) { return a += b; }
  friend HomogPoly operator-(HomogPoly a, const HomogPoly& b) { return a -= b; }
  HomogPoly operator-() const { return scaled(field_.neg(field_.one())); }

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly p(a.field_, a.degree_ + b.degree_);
    for (const auto& [u, c] : a.terms_) {
      for (const auto& [v, e] : b.terms_) p.add_term(u * v, a.field_.mul(c, e));
    }
    return p;
  }

  HomogPoly scaled(const Elem& s) const {
    HomogPoly p(field_, degree_);
    if (field_.is_zero(s)) return p;
    for (const auto& [u, c] : terms_) p.terms_.emplace(u, field_.mul(c, s));
    return p;
  }

  /// Formal partial derivative with respect to variable 0 (x), 1 (y) or 2 (z).
  HomogPoly derivative(int var) const {
    HomogPoly p(field_, degree_ - 1);
    for (const auto& [u, c] : terms_) {
      int e = var == 0 ? u.x : var == 1 ? u.y : u.z;
      if (e == 0) continue;
      Monomial v = u;
      (var == 0 ? v.x : var == 1 ? v.y : v.z) -= 1;
      p.add_term(v, field_.mul(c, field_.from_int(e)));
    }
    return p;
  }

  /// Coefficient vector in monomial_basis(degree()).
  std::vector<Elem> coefficients() const {
    std::vector<Elem> v(dim_S(degree_), field_.zero());
    for (const auto& [u, c] : terms_) v[monomial_index(u)] = c;
    return v;
  }

  static HomogPoly from_coefficients(F field, int degree, const std::vector<Elem>& v) {
    HomogPoly p(field, degree);
    auto basis = monomial_basis(degree);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
  }

  friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
      if (!(i->first == j->first) || !a.field_.equal(i->second, j->second)) return false;
    }
    return true;
  }

 private:
  void check_same_degree(const HomogPoly& o) const {
    if (o.degree_ != degree_) throw std::invalid_argument("HomogPoly: degree mismatch in addition");
  }

  F field_;
  int degree_;
  Terms terms_;
};

template <class F>
struct Gradient {
  HomogPoly<F> fx;
  HomogPoly<F> fy;
  HomogPoly<F> fz;

  const HomogPoly<F>& operator[](int i) const { return i == 0 ? fx : i == 1 ? fy : fz; }
};

template <class F>
Gradient<F> partials(const HomogPoly<F>& f) {
  if (f.degree() < 1) throw std::invalid_argument("partials: degree must be at least 1");
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

template <class F>
HomogPoly<F> variable(const F& field, int var) {
  Monomial u{var == 0, var == 1, var == 2};
  return HomogPoly<F>::monomial(field, u, field.one());
}

/// x f_x + y f_y + z f_z == d f.
template <class F>
bool euler_check(const HomogPoly<F>& f) {
  if (f.degree() < 1) return f.is_zero();
  const F& k = f.field();
  auto g = partials(f);
  auto lhs = variable(k, 0) * g.fx + variable(k, 1) * g.fy + variable(k, 2) * g.fz;
  return lhs == f.scaled(k.from_int(f.degree()));
}

/// Maps a rational polynomial into another field (e.g. reduction mod p).
template <class G>
HomogPoly<G> convert(const HomogPoly<RationalField>& f, const G& field) {
  HomogPoly<G> p(field, f.degree());
  for (const auto& [u, c] : f.terms()) p.add_term(u, field.from_rational(c));
  return p;
}

/// Prints in the parser's input syntax, e.g. "x^10*y*z - x*y^10*z".
template <class F>
std::string to_string(const HomogPoly<F>& f) {
  if (f.is_zero()) return "0";
  const F& k = f.field();
  std::string out;
  bool first = true;
  for (const auto& [u, c] : f.terms()) {
    std::string coeff = k.to_string(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = to_string(u);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += (coeff.find('/') != std::string::npos ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace syzcurve
