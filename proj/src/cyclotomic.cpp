#include "supercong/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "supercong/errors.hpp"
#include "supercong/modarith.hpp"

namespace supercong {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial; the remainder must vanish.
Poly divide_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return Poly{0};
  Poly quo(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    quo[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  trim(quo);
  return quo;
}

}  // namespace

unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_poly(unsigned m) {
  if (m == 0) throw PreconditionError("cyclotomic_poly: m must be positive");
  Poly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  Poly den{1};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) den = multiply(den, cyclotomic_poly(d));
  }
  return divide_monic(std::move(num), den);
}

CycRing::CycRing(Token, unsigned m) : m_(m), degree_(euler_phi(m)), phi_(cyclotomic_poly(m)) {}

std::shared_ptr<const CycRing> CycRing::make(unsigned m) {
  if (m == 0) throw PreconditionError("CycRing: order must be positive");
  return std::make_shared<const CycRing>(Token{}, m);
}

CycInt CycRing::zero() const {
  return CycInt(shared_from_this(), std::vector<BigInt>(degree_));
}

CycInt CycRing::from_integer(const BigInt& v) const {
  std::vector<BigInt> c(degree_);
  c[0] = v;
  return CycInt(shared_from_this(), std::move(c));
}

CycInt CycRing::zeta_power(std::int64_t e) const {
  const auto m = static_cast<std::int64_t>(m_);
  std::int64_t r = e % m;
  if (r < 0) r += m;
  std::vector<BigInt> cyc(m_);
  cyc[static_cast<std::size_t>(r)] = 1;
  return reduce_cyclic(cyc);
}

CycInt CycRing::reduce(std::vector<BigInt> poly) const {
  const std::size_t d = degree_;
  for (std::size_t i = poly.size(); i-- > d;) {
    const BigInt c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * phi_[j];
  }
  poly.resize(d);
  return CycInt(shared_from_this(), std::move(poly));
}

CycInt CycRing::reduce_cyclic(const std::vector<BigInt>& cyclic) const {
  if (cyclic.size() != m_) throw PreconditionError("reduce_cyclic: vector length must equal m");
  return reduce(cyclic);
}

void CycInt::check_ring(const CycInt& other) const {
  if (ring_->order() != other.ring_->order()) {
    throw PreconditionError("CycInt ring mismatch");
  }
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycInt CycInt::conjugate() const {
  const unsigned m = ring_->order();
  std::vector<BigInt> cyc(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) cyc[(m - i) % m] += coeffs_[i];
  return ring_->reduce_cyclic(cyc);
}

CycInt CycInt::times_zeta(std::int64_t e) const {
  const auto m = static_cast<std::int64_t>(ring_->order());
  std::int64_t r = e % m;
  if (r < 0) r += m;
  std::vector<BigInt> cyc(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    cyc[(i + static_cast<std::size_t>(r)) % static_cast<std::size_t>(m)] += coeffs_[i];
  }
  return ring_->reduce_cyclic(cyc);
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  check_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  check_ring(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  check_ring(rhs);
  *this = ring_->reduce(multiply(coeffs_, rhs.coeffs_));
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.ring_->order() == b.ring_->order() && a.coeffs_ == b.coeffs_;
}

CycInt CycInt::pow(unsigned e) const {
  CycInt result = ring_->from_integer(1);
  CycInt base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::string CycInt::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ", ";
    out += to_decimal(coeffs_[i]);
  }
  return out + "]";
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("primitive_root: p must be an odd prime");
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::uint64_t q : factors) {
      if (detail::pow_mod(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw std::logic_error("no primitive root found");
}

CharacterGroup::CharacterGroup(std::uint64_t p)
    : p_(p), g_(primitive_root(p)), log_(p, 0),
      ring_(CycRing::make(static_cast<unsigned>(p - 1))) {
  std::uint64_t x = 1;
  for (std::uint64_t a = 0; a + 1 < p; ++a) {
    log_[x] = a;
    x = x * g_ % p;
  }
}

void CharacterGroup::check(const MultChar& chi) const {
  if (chi.p != p_ || chi.t >= p_ - 1) {
    throw PreconditionError("character does not belong to F_" + std::to_string(p_));
  }
}

MultChar CharacterGroup::character(std::uint64_t t) const {
  if (t >= p_ - 1) throw PreconditionError("character exponent out of range");
  return MultChar{t, p_};
}

MultChar CharacterGroup::multiply(const MultChar& a, const MultChar& b) const {
  check(a);
  check(b);
  return MultChar{(a.t + b.t) % (p_ - 1), p_};
}

MultChar CharacterGroup::conjugate(const MultChar& a) const {
  check(a);
  return MultChar{(p_ - 1 - a.t) % (p_ - 1), p_};
}

std::uint64_t CharacterGroup::discrete_log(std::int64_t a) const {
  auto r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  if (r == 0) throw NotAUnit("discrete_log of 0");
  return log_[static_cast<std::size_t>(r)];
}

std::optional<std::uint64_t> CharacterGroup::value_exponent(const MultChar& chi,
                                                            std::int64_t a) const {
  check(chi);
  auto r = a % static_cast<std::int64_t>(p_);
  if (r == 0) return std::nullopt;
  return chi.t * discrete_log(a) % (p_ - 1);
}

CycInt CharacterGroup::value(const MultChar& chi, std::int64_t a) const {
  auto e = value_exponent(chi, a);
  if (!e) return ring_->zero();
  return ring_->zeta_power(static_cast<std::int64_t>(*e));
}

CycInt CharacterGroup::jacobi_sum(const MultChar& chi, const MultChar& psi) const {
  check(chi);
  check(psi);
  std::vector<BigInt> cyc(p_ - 1);
  const auto p = static_cast<std::int64_t>(p_);
  for (std::int64_t x = 2; x < p; ++x) {  // x = 0, 1 contribute chi(0) or psi(0) = 0
    const std::uint64_t e = (*value_exponent(chi, x) + *value_exponent(psi, 1 - x)) % (p_ - 1);
    cyc[e] += 1;
  }
  return ring_->reduce_cyclic(cyc);
}

GreeneBinomial CharacterGroup::greene_binomial(const MultChar& a, const MultChar& b) const {
  CycInt j = jacobi_sum(a, conjugate(b));
  // B(-1) = zeta^(t (p-1)/2) = (-1)^t
  if (b.t % 2 == 1) j *= BigInt(-1);
  return GreeneBinomial{std::move(j), p_};
}

namespace {

void check_guard(std::uint64_t p, std::uint64_t guard, const char* what) {
  if (p > guard) {
    throw GuardExceeded(std::string(what) + ": p = " + std::to_string(p) +
                        " exceeds the prime guard " + std::to_string(guard));
  }
}

}  // namespace

BigRational hypergeometric_def2(const CharacterGroup& group, const std::vector<MultChar>& top,
                                const std::vector<MultChar>& bottom, std::int64_t x,
                                std::uint64_t prime_guard) {
  const std::uint64_t p = group.p();
  check_guard(p, prime_guard, "hypergeometric_def2");
  if (top.size() != bottom.size() + 1 || top.empty()) {
    throw PreconditionError("hypergeometric_def2: need n+1 top and n bottom characters");
  }
  const std::size_t n = bottom.size();
  const auto& ring = group.ring();
  CycInt total = ring->zero();
  for (std::uint64_t t = 0; t + 1 < p; ++t) {
    const MultChar chi = group.character(t);
    const CycInt chi_x = group.value(chi, x);
    if (chi_x.is_zero()) continue;
    CycInt term = group.greene_binomial(group.multiply(top[0], chi), chi).numerator;
    for (std::size_t i = 0; i < n; ++i) {
      term *= group.greene_binomial(group.multiply(top[i + 1], chi), group.multiply(bottom[i], chi))
                  .numerator;
    }
    term *= chi_x;
    total += term;
  }
  if (!total.is_rational()) {
    throw NonRationalResult("hypergeometric_def2: character sum " + total.to_string() +
                            " is not rational");
  }
  // p/(p-1) * total / p^(n+1)
  BigInt den = big_from_u64(p - 1) * ipow(big_from_u64(p), n);
  return make_rational(total.constant(), den);
}

BigRational hypergeometric_phi(const CharacterGroup& group, unsigned n, std::int64_t x,
                               std::uint64_t prime_guard) {
  std::vector<MultChar> top(n + 1, group.quadratic());
  std::vector<MultChar> bottom(n, group.trivial());
  return hypergeometric_def2(group, top, bottom, x, prime_guard);
}

namespace {

CharacterGroup guarded_group(std::uint64_t p, std::uint64_t guard) {
  check_guard(p, guard, "hypergeometric_int");
  return CharacterGroup(p);
}

}  // namespace

GreeneOracle::GreeneOracle(std::uint64_t p, std::uint64_t prime_guard)
    : group_(guarded_group(p, prime_guard)) {
  const MultChar phi = group_.quadratic();
  jacobi_phi_.reserve(p - 1);
  for (std::uint64_t t = 0; t + 1 < p; ++t) {
    jacobi_phi_.push_back(group_.jacobi_sum(phi, group_.character(t)));
  }
}

std::vector<CycInt> GreeneOracle::jacobi_powers(unsigned n) const {
  if (n == 0) throw PreconditionError("hypergeometric_int: n must be positive");
  std::vector<CycInt> out;
  out.reserve(jacobi_phi_.size());
  for (const auto& j : jacobi_phi_) out.push_back(j.pow(n + 1));
  return out;
}

BigInt GreeneOracle::finish(const std::vector<CycInt>& powers, std::uint64_t lam) const {
  const std::uint64_t p = group_.p();
  const std::uint64_t m = p - 1;
  if (lam == 0 || lam >= p) throw PreconditionError("hypergeometric_int: lambda must lie in [1, p-1]");
  const std::uint64_t log_lam = group_.discrete_log(static_cast<std::int64_t>(lam));
  // Accumulate in Z[x]/(x^m - 1), then reduce once; Phi_m divides x^m - 1.
  std::vector<BigInt> cyc(m);
  for (std::uint64_t t = 0; t < m; ++t) {
    const std::uint64_t shift = (m - t * log_lam % m) % m;  // conj(chi_t)(lam)
    const auto& c = powers[t].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) cyc[(i + shift) % m] += c[i];
  }
  CycInt sum = group_.ring()->reduce_cyclic(cyc);
  if (!sum.is_rational()) {
    throw NonIntegerResult("hypergeometric_int: character sum " + sum.to_string() +
                           " has nonzero irrational coordinates");
  }
  // -(1/(1-p)) * S = S / (p-1)
  const BigInt den = big_from_u64(m);
  if (!mpz_divisible_p(sum.constant().get_mpz_t(), den.get_mpz_t())) {
    throw NonIntegerResult("hypergeometric_int: " + to_decimal(sum.constant()) +
                           " is not divisible by p-1");
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), sum.constant().get_mpz_t(), den.get_mpz_t());
  return out;
}

BigInt GreeneOracle::value(unsigned n, std::uint64_t lam) const {
  return finish(jacobi_powers(n), lam);
}

std::vector<BigInt> GreeneOracle::values(unsigned n) const {
  const auto powers = jacobi_powers(n);
  std::vector<BigInt> out;
  out.reserve(group_.p() - 1);
  for (std::uint64_t lam = 1; lam < group_.p(); ++lam) out.push_back(finish(powers, lam));
  return out;
}

BigInt hypergeometric_int(unsigned n, std::uint64_t lam, std::uint64_t p,
                          std::uint64_t prime_guard) {
  return GreeneOracle(p, prime_guard).value(n, lam);
}

}  // namespace supercong
