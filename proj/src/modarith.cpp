#include "supercong/modarith.hpp"

#include <limits>

#include "supercong/errors.hpp"

namespace supercong {

namespace detail {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  i128 r0 = m, r1 = a % m;
  i128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i128 q = r0 / r1;
    i128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    i128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return 0;
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  if (bound < 2) throw PreconditionError("primes_up_to: bound must be >= 2");
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

RingDesc::RingDesc(std::uint64_t p, unsigned k) : p_(p), k_(k), modulus_(1) {
  if (p == 2) throw PreconditionError("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw PreconditionError("RingDesc: " + std::to_string(p) + " is not prime");
  if (k == 0) throw PreconditionError("RingDesc: exponent must be positive");
  constexpr std::uint64_t limit = std::uint64_t{1} << 62;
  for (unsigned i = 0; i < k; ++i) {
    if (modulus_ > limit / p) {
      throw RangeError("RingDesc: " + std::to_string(p) + "^" + std::to_string(k) +
                       " exceeds the 62-bit modulus limit");
    }
    modulus_ *= p;
  }
}

std::string RingDesc::to_string() const {
  return std::to_string(p_) + "^" + std::to_string(k_);
}

Residue::Residue(std::int64_t value, const RingDesc& ring) : value_(0), ring_(ring) {
  const auto m = static_cast<detail::i128>(ring.modulus());
  detail::i128 v = static_cast<detail::i128>(value) % m;
  if (v < 0) v += m;
  value_ = static_cast<std::uint64_t>(v);
}

Residue Residue::from_u64(std::uint64_t value, const RingDesc& ring) {
  return Residue(Raw{}, value % ring.modulus(), ring);
}

Residue Residue::from_big(const BigInt& value, const RingDesc& ring) {
  BigInt m = big_from_u64(ring.modulus());
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, r.get_mpz_t());
  return Residue(Raw{}, out, ring);
}

Residue Residue::from_rational(const BigRational& value, const RingDesc& ring) {
  Residue den = from_big(value.get_den(), ring);
  if (!den.is_unit()) {
    throw NotInvertible("denominator " + to_decimal(value.get_den()) + " is divisible by p = " +
                        std::to_string(ring.p()));
  }
  return from_big(value.get_num(), ring) * den.inverse();
}

void Residue::check_ring(const Residue& other) const {
  if (!(ring_ == other.ring_)) {
    throw PreconditionError("residue ring mismatch: " + ring_.to_string() + " vs " +
                            other.ring_.to_string());
  }
}

Residue Residue::inverse() const {
  std::uint64_t inv = detail::inv_mod(value_, ring_.modulus());
  if (inv == 0) {
    throw NotInvertible(std::to_string(value_) + " is not invertible modulo " + ring_.to_string());
  }
  return Residue(Raw{}, inv, ring_);
}

Residue Residue::pow(std::int64_t exp) const {
  if (exp < 0) {
    // -(exp+1) + 1 avoids overflow at INT64_MIN.
    auto e = static_cast<std::uint64_t>(-(exp + 1)) + 1;
    return Residue(Raw{}, detail::pow_mod(inverse().value_, e, ring_.modulus()), ring_);
  }
  return Residue(Raw{}, detail::pow_mod(value_, static_cast<std::uint64_t>(exp), ring_.modulus()),
                 ring_);
}

Residue Residue::reduce_to(unsigned k) const {
  if (k > ring_.k()) {
    throw PrecisionError("cannot lift a residue mod " + ring_.to_string() + " to exponent " +
                         std::to_string(k));
  }
  RingDesc lower = ring_.with_exponent(k);
  return Residue(Raw{}, value_ % lower.modulus(), lower);
}

std::int64_t Residue::signed_value() const noexcept {
  const std::uint64_t m = ring_.modulus();
  if (value_ > m / 2) return -static_cast<std::int64_t>(m - value_);
  return static_cast<std::int64_t>(value_);
}

Residue Residue::operator-() const {
  return Residue(Raw{}, value_ == 0 ? 0 : ring_.modulus() - value_, ring_);
}

Residue& Residue::operator+=(const Residue& rhs) {
  check_ring(rhs);
  const std::uint64_t m = ring_.modulus();
  value_ += rhs.value_;
  if (value_ >= m) value_ -= m;
  return *this;
}

Residue& Residue::operator-=(const Residue& rhs) {
  check_ring(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (ring_.modulus() - rhs.value_);
  return *this;
}

Residue& Residue::operator*=(const Residue& rhs) {
  check_ring(rhs);
  value_ = detail::mul_mod(value_, rhs.value_, ring_.modulus());
  return *this;
}

Residue mod_inverse(const Residue& a) { return a.inverse(); }

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("legendre: p must be an odd prime");
  auto r = static_cast<std::int64_t>(static_cast<detail::i128>(a) % static_cast<detail::i128>(p));
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  std::uint64_t e = detail::pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

Residue teichmuller(std::int64_t lam, std::uint64_t p, unsigned s) {
  RingDesc ring(p, s);
  Residue x(lam, ring);
  if (!x.is_unit()) {
    throw NotAUnit("teichmuller: " + std::to_string(lam) + " is divisible by " + std::to_string(p));
  }
  for (unsigned i = 1; i < s; ++i) x = x.pow(static_cast<std::int64_t>(p));
  return x;
}

Residue binomial_mod(std::uint64_t top, std::uint64_t bot, const RingDesc& ring) {
  if (top >= ring.p()) {
    throw RangeError("binomial_mod: top = " + std::to_string(top) + " must be below p = " +
                     std::to_string(ring.p()));
  }
  if (bot > top) throw RangeError("binomial_mod: bot exceeds top");
  Residue num(1, ring), den(1, ring);
  for (std::uint64_t i = 0; i < bot; ++i) {
    num *= Residue::from_u64(top - i, ring);
    den *= Residue::from_u64(i + 1, ring);
  }
  return num * den.inverse();
}

FactorialTable::FactorialTable(std::uint64_t bound, const RingDesc& ring)
    : ring_(ring), fact_(bound + 1), inv_fact_(bound + 1) {
  if (bound >= ring.p()) {
    throw RangeError("FactorialTable: bound must be below p");
  }
  const std::uint64_t m = ring.modulus();
  fact_[0] = 1;
  for (std::uint64_t i = 1; i <= bound; ++i) fact_[i] = detail::mul_mod(fact_[i - 1], i, m);
  inv_fact_[bound] = detail::inv_mod(fact_[bound], m);
  for (std::uint64_t i = bound; i > 0; --i) inv_fact_[i - 1] = detail::mul_mod(inv_fact_[i], i, m);
}

Residue FactorialTable::factorial(std::uint64_t n) const {
  return Residue::from_u64(fact_.at(n), ring_);
}

Residue FactorialTable::inverse_factorial(std::uint64_t n) const {
  return Residue::from_u64(inv_fact_.at(n), ring_);
}

Residue FactorialTable::binomial(std::uint64_t top, std::uint64_t bot) const {
  if (bot > top) return Residue(0, ring_);
  return factorial(top) * inverse_factorial(bot) * inverse_factorial(top - bot);
}

}  // namespace supercong
