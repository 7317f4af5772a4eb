#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[zeta_m] and character sums over F_p.
 *
 * Elements of Z[zeta_m] are stored on the power basis 1, zeta, ..., zeta^(phi(m)-1)
 * of Z[x]/Phi_m(x). Reduction modulo Phi_m (not x^m - 1) makes the coordinates
 * unique, so "this character sum is a rational integer" is a direct check on
 * the coordinates.
 *
 * The multiplicative characters of F_p* are chi_t(g^a) = zeta^(t*a) with g the
 * smallest primitive root and zeta = zeta_(p-1); every character vanishes at 0.
 * GreeneOracle evaluates p^n * (n+1)F_n(lambda) as an exact integer.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "supercong/bigint.hpp"

namespace supercong {

/// Phi_m as ascending integer coefficients, via (x^m - 1) / prod_{d | m, d < m} Phi_d.
std::vector<BigInt> cyclotomic_poly(unsigned m);

/// Euler's totient.
unsigned euler_phi(unsigned m);

class CycInt;

class CycRing : public std::enable_shared_from_this<CycRing> {
 public:
  static std::shared_ptr<const CycRing> make(unsigned m);

  unsigned order() const noexcept { return m_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<BigInt>& polynomial() const noexcept { return phi_; }

  CycInt zero() const;
  CycInt from_integer(const BigInt& v) const;
  CycInt zeta_power(std::int64_t e) const;

  /// Reduces an arbitrary ascending coefficient vector modulo Phi_m.
  CycInt reduce(std::vector<BigInt> poly) const;

  /// Reduces sum_{e<m} cyclic[e] * zeta^e, i.e. an element of Z[x]/(x^m - 1).
  CycInt reduce_cyclic(const std::vector<BigInt>& cyclic) const;

 private:
  struct Token {};

 public:
  CycRing(Token, unsigned m);

 private:
  unsigned m_;
  unsigned degree_;
  std::vector<BigInt> phi_;
};

class CycInt {
 public:
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const CycRing& ring() const noexcept { return *ring_; }

  bool is_zero() const;
  /// True iff every coordinate above the constant one is zero.
  bool is_rational() const;
  const BigInt& constant() const { return coeffs_.front(); }

  /// Complex conjugation zeta -> zeta^-1.
  CycInt conjugate() const;
  CycInt times_zeta(std::int64_t e) const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);
  CycInt& operator*=(const BigInt& scalar);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const BigInt& s) { return a *= s; }
  friend bool operator==(const CycInt& a, const CycInt& b);

  CycInt pow(unsigned e) const;

  std::string to_string() const;

 private:
  friend class CycRing;
  CycInt(std::shared_ptr<const CycRing> ring, std::vector<BigInt> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}
  void check_ring(const CycInt& other) const;

  std::shared_ptr<const CycRing> ring_;
  std::vector<BigInt> coeffs_;
};

/// Smallest positive primitive root modulo an odd prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// chi_t; t in [0, p-2]. t = 0 is the trivial character, t = (p-1)/2 the quadratic one.
struct MultChar {
  std::uint64_t t;
  std::uint64_t p;
  friend bool operator==(const MultChar&, const MultChar&) = default;
};

/// (B(-1) * J(A, conj B)) / p, kept as an exact numerator over the denominator p.
struct GreeneBinomial {
  CycInt numerator;
  std::uint64_t denominator;
};

/// Discrete-log table and character arithmetic for F_p*.
class CharacterGroup {
 public:
  explicit CharacterGroup(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t generator() const noexcept { return g_; }
  std::uint64_t order() const noexcept { return p_ - 1; }
  const std::shared_ptr<const CycRing>& ring() const noexcept { return ring_; }

  MultChar character(std::uint64_t t) const;
  MultChar trivial() const { return character(0); }
  MultChar quadratic() const { return character((p_ - 1) / 2); }
  MultChar multiply(const MultChar& a, const MultChar& b) const;
  MultChar conjugate(const MultChar& a) const;

  /// log_g(a) for a unit a.
  std::uint64_t discrete_log(std::int64_t a) const;
  /// Exponent e with chi(a) = zeta^e, or nullopt when a = 0 (chi(0) = 0).
  std::optional<std::uint64_t> value_exponent(const MultChar& chi, std::int64_t a) const;
  CycInt value(const MultChar& chi, std::int64_t a) const;

  /// J(chi, psi) = sum_x chi(x) psi(1 - x).
  CycInt jacobi_sum(const MultChar& chi, const MultChar& psi) const;
  GreeneBinomial greene_binomial(const MultChar& a, const MultChar& b) const;

 private:
  void check(const MultChar& chi) const;

  std::uint64_t p_;
  std::uint64_t g_;
  std::vector<std::uint64_t> log_;  // log_[a] = log_g(a), a in [1, p-1]
  std::shared_ptr<const CycRing> ring_;
};

inline constexpr std::uint64_t kDef2PrimeGuard = 31;
inline constexpr std::uint64_t kOraclePrimeGuard = 61;

/// The Gaussian hypergeometric function with arbitrary characters, evaluated
/// literally from Greene's character-binomial sum. Asserts the result is
/// rational and returns it. top has n+1 entries, bottom n.
BigRational hypergeometric_def2(const CharacterGroup& group, const std::vector<MultChar>& top,
                                const std::vector<MultChar>& bottom, std::int64_t x,
                                std::uint64_t prime_guard = kDef2PrimeGuard);

/// All-phi over all-epsilon specialization of hypergeometric_def2.
BigRational hypergeometric_phi(const CharacterGroup& group, unsigned n, std::int64_t x,
                               std::uint64_t prime_guard = kDef2PrimeGuard);

/// Evaluates p^n * (n+1)F_n(lambda) as
///   -(1/(1-p)) * sum_chi J(phi, chi)^(n+1) * conj(chi)(lambda).
/// The Jacobi sums J(phi, chi) are computed once per prime.
class GreeneOracle {
 public:
  explicit GreeneOracle(std::uint64_t p, std::uint64_t prime_guard = kOraclePrimeGuard);

  std::uint64_t p() const noexcept { return group_.p(); }
  const CharacterGroup& group() const noexcept { return group_; }

  /// The integer p^n * F(lambda) for lambda in [1, p-1].
  BigInt value(unsigned n, std::uint64_t lam) const;
  /// value(n, lam) for every lam in [1, p-1]; entry lam-1.
  std::vector<BigInt> values(unsigned n) const;

 private:
  std::vector<CycInt> jacobi_powers(unsigned n) const;
  BigInt finish(const std::vector<CycInt>& powers, std::uint64_t lam) const;

  CharacterGroup group_;
  std::vector<CycInt> jacobi_phi_;  // J(phi, chi_t), t in [0, p-2]
};

BigInt hypergeometric_int(unsigned n, std::uint64_t lam, std::uint64_t p,
                          std::uint64_t prime_guard = kOraclePrimeGuard);

}  // namespace supercong
