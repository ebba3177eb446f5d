#include "syzcurve/field.hpp"

#include <array>
#include <stdexcept>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p % 2 == 0 || p < (std::uint64_t{1} << 31) || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p))
    throw std::invalid_argument("PrimeField: modulus must be an odd prime in (2^31, 2^63)");
  // Newton iteration for p^{-1} mod 2^64; each step doubles the correct bits.
  std::uint64_t inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  neg_inv_ = ~inv + 1;
  one_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
  r2_ = mulmod(one_, one_, p);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
  std::uint64_t a = v >= 0 ? static_cast<std::uint64_t>(v) % p_
                           : (p_ - static_cast<std::uint64_t>(-(v + 1)) % p_ - 1) % p_;
  return mul(a, r2_);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  auto reduce = [this](const mpz_class& z) {
    std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), p_);
    return mul(r, r2_);
  };
  Element den = reduce(q.get_den());
  if (den == 0) throw UnluckyPrime("denominator " + q.get_den().get_str() + " vanishes modulo " + std::to_string(p_));
  return div(reduce(q.get_num()), den);
}

PrimeField::Element PrimeField::pow(Element base, std::uint64_t e) const {
  Element r = one_;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("RationalField: inverse of zero");
  return 1 / a;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 62, (std::uint64_t{1} << 63) - 1);
  for (;;) {
    std::uint64_t candidate = dist(rng) | 1;
    if (is_prime_u64(candidate)) return candidate;
  }
}

std::pair<std::uint64_t, std::uint64_t> primes_from_seed(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t p1 = random_prime(rng);
  std::uint64_t p2 = random_prime(rng);
  while (p2 == p1) p2 = random_prime(rng);
  return {p1, p2};
}

}  // namespace syzcurve
