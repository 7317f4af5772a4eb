#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace supercong {

using BigInt = mpz_class;
/// Always canonical: denominator > 0 and gcd(num, den) = 1.
using BigRational = mpq_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

inline BigInt big_from_i64(std::int64_t v) {
  if (v >= 0) return big_from_u64(static_cast<std::uint64_t>(v));
  return -big_from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  return make_rational(big_from_i64(num), big_from_i64(den));
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// "a/b", or "a" when the denominator is 1.
inline std::string to_decimal(const BigRational& v) { return v.get_str(10); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long top, unsigned long bot) {
  BigInt r;
  if (bot > top) return r;
  mpz_bin_uiui(r.get_mpz_t(), top, bot);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigRational rpow(const BigRational& base, unsigned long e) {
  BigRational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return r;
}

/// (-1)^k as a small integer.
constexpr int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace supercong
