#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace syzcurve {

// Fields are passed around as small value objects that own the arithmetic;
// elements are plain values. Generic code only ever talks to a field through
// the member functions below, so PrimeField and RationalField are drop-in
// replacements for one another.

/// The prime field F_p for an odd prime 2^31 < p < 2^63. Elements are kept in
/// Montgomery form (R = 2^64); use canonical() to read them back.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return one_; }
  Element from_int(std::int64_t v) const;
  Element from_rational(const mpq_class& q) const;

  Element add(Element a, Element b) const noexcept {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept { return redc(static_cast<unsigned __int128>(a) * b); }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool equal(Element a, Element b) const noexcept { return a == b; }

  std::uint64_t canonical(Element a) const noexcept { return redc(a); }
  std::string to_string(Element a) const { return std::to_string(canonical(a)); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  Element redc(unsigned __int128 t) const noexcept {
    std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }
  Element pow(Element base, std::uint64_t e) const;

  std::uint64_t p_;
  std::uint64_t neg_inv_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;       // 2^128 mod p
  std::uint64_t one_;      // 2^64 mod p
};

/// The rational numbers, backed by GMP. mpq_class keeps values canonical
/// (lowest terms, positive denominator) after every operation.
class RationalField {
 public:
  using Element = mpq_class;

  std::string name() const { return "QQ"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

bool is_prime_u64(std::uint64_t n);

/// Uniformly random prime in [2^62, 2^63).
std::uint64_t random_prime(std::mt19937_64& rng);

/// The two working primes derived from a seed. Deterministic for a fixed seed.
std::pair<std::uint64_t, std::uint64_t> primes_from_seed(std::uint64_t seed);

}  // namespace syzcurve
