#pragma once

/**
 * @file modarith.hpp
 * @brief Residues modulo p^k for an odd prime p.
 *
 * Values are kept canonically in [0, p^k), so equality is a field comparison.
 * Moduli are limited to 62 bits; products go through 128-bit intermediates.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/bigint.hpp"

namespace supercong {

namespace detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

}  // namespace detail

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Ascending list of all primes <= bound. Requires bound >= 2.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// The ring Z/p^kZ. p must be an odd prime and p^k < 2^62.
class RingDesc {
 public:
  RingDesc(std::uint64_t p, unsigned k);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Same prime, different exponent.
  RingDesc with_exponent(unsigned k) const { return RingDesc(p_, k); }

  std::string to_string() const;

  friend bool operator==(const RingDesc&, const RingDesc&) = default;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t modulus_;
};

class Residue {
 public:
  Residue(std::int64_t value, const RingDesc& ring);

  static Residue from_u64(std::uint64_t value, const RingDesc& ring);
  static Residue from_big(const BigInt& value, const RingDesc& ring);
  /// num/den with den inverted modulo p^k. Throws NotInvertible if p | den.
  static Residue from_rational(const BigRational& value, const RingDesc& ring);

  std::uint64_t value() const noexcept { return value_; }
  const RingDesc& ring() const noexcept { return ring_; }

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % ring_.p() != 0; }

  /// Throws NotInvertible when p divides the value.
  Residue inverse() const;
  /// Negative exponents invert first.
  Residue pow(std::int64_t exp) const;
  /// Canonical image in Z/p^kZ for k <= ring().k().
  Residue reduce_to(unsigned k) const;

  /// Symmetric representative in (-p^k/2, p^k/2].
  std::int64_t signed_value() const noexcept;

  std::string to_string() const { return std::to_string(value_); }

  Residue operator-() const;
  Residue& operator+=(const Residue& rhs);
  Residue& operator-=(const Residue& rhs);
  Residue& operator*=(const Residue& rhs);

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator*(Residue a, std::int64_t b) { return a *= Residue(b, a.ring_); }
  friend Residue operator*(std::int64_t a, Residue b) { return b *= Residue(a, b.ring_); }
  friend Residue operator+(Residue a, std::int64_t b) { return a += Residue(b, a.ring_); }
  friend Residue operator-(Residue a, std::int64_t b) { return a -= Residue(b, a.ring_); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }
  friend bool operator==(const Residue& a, std::int64_t b) { return a == Residue(b, a.ring_); }

 private:
  struct Raw {};
  Residue(Raw, std::uint64_t value, const RingDesc& ring) : value_(value), ring_(ring) {}
  void check_ring(const Residue& other) const;

  std::uint64_t value_;
  RingDesc ring_;
};

/// a * result == 1 (mod p^k). Throws NotInvertible when p | a.
Residue mod_inverse(const Residue& a);

/// Euler's criterion mapped to {-1, 0, +1}.
int legendre(std::int64_t a, std::uint64_t p);

/// Teichmuller lift omega(lam) mod p^s, computed as lam^(p^(s-1)) by iterated
/// p-th powers. Throws NotAUnit when p | lam.
Residue teichmuller(std::int64_t lam, std::uint64_t p, unsigned s);

/// C(top, bot) mod p^k for 0 <= bot <= top <= p-1.
/// Throws RangeError when top >= p.
Residue binomial_mod(std::uint64_t top, std::uint64_t bot, const RingDesc& ring);

/// Factorials 0!..bound! and their inverses modulo p^k, bound <= p-1.
class FactorialTable {
 public:
  FactorialTable(std::uint64_t bound, const RingDesc& ring);

  const RingDesc& ring() const noexcept { return ring_; }
  Residue factorial(std::uint64_t n) const;
  Residue inverse_factorial(std::uint64_t n) const;
  Residue binomial(std::uint64_t top, std::uint64_t bot) const;

 private:
  RingDesc ring_;
  std::vector<std::uint64_t> fact_;
  std::vector<std::uint64_t> inv_fact_;
};

}  // namespace supercong
