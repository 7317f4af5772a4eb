#pragma once

/**
 * @file congruences.hpp
 * @brief The binomial-harmonic sums X, Y, Z, D, the Gamma-quotient kernels,
 * and the checks that tie them to the character-sum oracle.
 *
 * X lives modulo p, Y modulo p^2 and Z modulo p^3 (or p^4); they are only
 * ever combined as p^2 X + p Y + Z modulo p^3.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "supercong/bigint.hpp"
#include "supercong/cyclotomic.hpp"
#include "supercong/modarith.hpp"
#include "supercong/padic.hpp"
#include "supercong/report.hpp"

namespace supercong {

struct CongruenceInput {
  std::uint64_t p;
  unsigned n;
  std::uint64_t lam;

  /// Throws PreconditionError unless p is an odd prime, n >= 1 and 1 <= lam < p.
  void validate() const;
  bool n_odd() const noexcept { return n % 2 == 1; }
};

Residue X_eval(const CongruenceInput& in);
Residue Y_eval(const CongruenceInput& in);
Residue Z_eval(const CongruenceInput& in, unsigned k = 3);
Residue D_eval(std::uint64_t p, std::uint64_t lam);
/// sum_{j=1}^{(p-3)/2} C((p-1)/2+j, j)^-1 C((p-1)/2, j)^-1 (-1)^j modulo p.
Residue D_alt(std::uint64_t p);

enum class KernelForm { Coep2, Coep, Coe1, Combined };

/// Per-(p, n) data for the Gamma-quotient kernels: the quotients
/// Gamma_p(1/2+j)^(n+1)/Gamma_p(1+j)^(n+1) and, for p >= 7, A(j) and B(n, j).
class KernelTerms {
 public:
  /// table must have precision >= 3.
  KernelTerms(std::shared_ptr<const GammaTable> table, unsigned n);

  std::uint64_t p() const noexcept { return table_->ring().p(); }
  unsigned n() const noexcept { return n_; }
  bool has_ab() const noexcept { return !a_.empty(); }

  /// Coep2 modulo p, Coep modulo p^2, Coe1 and Combined modulo p^3.
  /// Combined is the undivided expansion
  ///   (1+p+p^2){phi(lam) + kappa sum_j Gamma_p(1/2+jq)^(n+1)/Gamma_p(1+jq)^(n+1) omega^(h-j)(lam)},
  /// q = 1/(1-p), valid for every p.
  Residue eval(KernelForm form, std::uint64_t lam) const;

  /// (-phi(-1))^(n+1).
  int sign() const noexcept { return sign_; }

 private:
  std::shared_ptr<const GammaTable> table_;
  unsigned n_;
  int sign_;
  Residue kappa_;                  // (-Gamma_p(1/2))^-(n+1) mod p^3
  std::vector<Residue> quotient_;  // index j-1, mod p^3
  std::vector<Residue> combined_;  // index j-1, mod p^3
  std::vector<Residue> a_;         // mod p^2
  std::vector<Residue> b_;         // mod p
};

Residue kernel_eval(const CongruenceInput& in, KernelForm form);

/// Right side of the main congruence modulo p^3. Odd n uses the binomial forms
/// (plus p^2 D at n = 1); even n uses the kernels scaled by (-phi(-1))^(n+1).
Residue theorem_rhs(const CongruenceInput& in, const KernelTerms* kernels);

/// -p^n (n+1)F_n(lam) modulo p^3 against theorem_rhs. oracle_value is p^n F.
CheckReport theorem_check(const CongruenceInput& in, const BigInt& oracle_value,
                          const KernelTerms* kernels);
CheckReport theorem_check(const CongruenceInput& in);

/// p * 2F1(1) == -phi(-1) exactly, from the oracle.
CheckReport special_value_check(const GreeneOracle& oracle);

CheckReport yeah_check(std::uint64_t p, unsigned n);

Residue corollary_lhs(std::uint64_t p, unsigned k);
CheckReport corollary_check(std::uint64_t p, unsigned k);

CheckReport xd_check(std::uint64_t p);
CheckReport yp_check(std::uint64_t p);
/// D(p, 1) against D_alt(p).
CheckReport d_forms_check(std::uint64_t p);

/// For odd n: p^2 Coep2 + p Coep + Coe1 == p^2 X + p Y + Z modulo p^3, all lam.
CheckReport assembly_check(const KernelTerms& kernels);
/// Coe1 == Z modulo p^3, all lam, any n.
CheckReport equal_check(const KernelTerms& kernels);

}  // namespace supercong
