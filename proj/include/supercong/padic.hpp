#pragma once

/**
 * @file padic.hpp
 * @brief Morita's p-adic Gamma function modulo p^k and the congruences built on it.
 *
 * Gamma_p is tabulated on [0, p^k) by Gamma_p(0) = 1 and
 * Gamma_p(r+1) = -r Gamma_p(r) (p does not divide r), -Gamma_p(r) otherwise.
 * Since Gamma_p(x) mod p^k depends only on x mod p^k, a p-adic argument such
 * as 1/2 or j/(p-1) is looked up through its residue.
 */

#include <cstdint>
#include <memory>
#include <vector>

#include "supercong/modarith.hpp"
#include "supercong/report.hpp"

namespace supercong {

inline constexpr unsigned kMaxGammaPrecision = 5;

/// A p-adic integer known modulo p^k.
class PadicPoint {
 public:
  explicit PadicPoint(Residue value) : value_(std::move(value)) {}
  static PadicPoint from_integer(std::int64_t v, const RingDesc& ring) {
    return PadicPoint(Residue(v, ring));
  }
  /// num/den with p not dividing den.
  static PadicPoint from_fraction(std::int64_t num, std::int64_t den, const RingDesc& ring);

  const Residue& residue() const noexcept { return value_; }
  /// Constant term of the p-adic expansion taken in [1, p].
  std::uint64_t x0() const noexcept;

  PadicPoint operator+(std::int64_t s) const { return PadicPoint(value_ + s); }
  PadicPoint operator+(const PadicPoint& o) const { return PadicPoint(value_ + o.value_); }
  PadicPoint operator-(const PadicPoint& o) const { return PadicPoint(value_ - o.value_); }
  /// 1 - x.
  PadicPoint complement() const { return PadicPoint(Residue(1, value_.ring()) - value_); }

 private:
  Residue value_;
};

class GammaTable {
 public:
  /// O(p^k) time and memory. Throws PrecisionError above kMaxGammaPrecision
  /// unless allow_above_ceiling is set.
  static std::shared_ptr<const GammaTable> build(const RingDesc& ring,
                                                 bool allow_above_ceiling = false);

  const RingDesc& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Gamma_p(r) for the representative r in [0, p^k).
  Residue at(std::uint64_t r) const;
  Residue operator()(const PadicPoint& x) const;

  const std::vector<std::uint64_t>& raw() const noexcept { return values_; }

 private:
  explicit GammaTable(const RingDesc& ring);

  RingDesc ring_;
  std::vector<std::uint64_t> values_;
};

Residue gamma_p(const PadicPoint& x, const GammaTable& table);

/// Gamma_p(x) Gamma_p(1-x) == (-1)^x0.
bool reflection_check(const PadicPoint& x, const GammaTable& table);

/// G1(x) = Gamma_p'(x)/Gamma_p(x) modulo p^2 and G2(x) = Gamma_p''(x)/Gamma_p(x) modulo p.
struct LogDerivatives {
  Residue g1;
  Residue g2;
};

/// Solves Gamma_p(x + z) = Gamma_p(x)(1 + z G1 + z^2/2 G2) at z = p, 2p modulo p^3.
/// Needs a table of precision >= 3 and p >= 7; SingularSystem if the
/// divisibility the expansion predicts is violated.
LogDerivatives g1_g2(const PadicPoint& x, const GammaTable& table);

/// A(j) = G1(1/2 + j) - G1(1 + j) modulo p^2 and B(n, j) modulo p.
struct KernelAB {
  Residue a;
  Residue b;
};

KernelAB kernel_ab(unsigned n, std::uint64_t j, const GammaTable& table);

/// Binomial form against Gamma quotient, every 1 <= j <= (p-1)/2, modulo p^2.
CheckReport verify_lemma_bc(std::uint64_t p);
CheckReport verify_lemma_bc(const GammaTable& table);

/// A(j) and B(n, j) against harmonic sums for 0 <= j <= (p-1)/2.
/// SKIPPED below p = 7. The table must have precision >= 3.
CheckReport verify_lemma_har(std::uint64_t p, unsigned n);
CheckReport verify_lemma_har(const GammaTable& table, unsigned n);

/// [-phi(-1)(-1)^j C((p-1)/2+j, j) C((p-1)/2, j)]^((n+1)/2) against
/// Gamma_p(1/2+j)^(n+1)/Gamma_p(1+j)^(n+1) modulo p^2, n odd, all j.
CheckReport mandy_check(const GammaTable& table, unsigned n);

/// Gamma_p(1/2)^2 == -phi(-1) modulo p^2.
CheckReport half_gamma_check(std::uint64_t p);

/// The exact Gamma-quotient expansion of -p^n (n+1)F_n(lam) modulo p^k.
/// n must be odd; k <= kMaxGammaPrecision.
Residue nasty_rhs(unsigned n, std::uint64_t lam, std::uint64_t p, unsigned k);
Residue nasty_rhs(unsigned n, std::uint64_t lam, const GammaTable& table);

}  // namespace supercong
