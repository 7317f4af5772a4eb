#pragma once

/**
 * @file identities.hpp
 * @brief Exact-rational checks of the binomial-harmonic sum identities,
 * their recurrences, recurrence solutions and telescoping certificates.
 *
 * Throughout, CC(n, k) = C(n+k, k) C(n, k) and H_k is the harmonic number.
 */

#include <optional>
#include <string>
#include <vector>

#include "supercong/bigint.hpp"
#include "supercong/report.hpp"

namespace supercong {

enum class IdentityId {
  COOL,
  NEW,
  OLD,
  REL2,
  SUMK,
  SUMNPK,
  SUMNMK,
  ALGSUM1,
  ALGSUM2,
  AUX_INV,
  AUX_HK,
  CATALAN_STEP,
  GAUSS_APL,
  SHALF_EVEN,
  SHALF_ODD,
};

const std::vector<IdentityId>& all_identities();
std::string to_string(IdentityId id);
/// Throws ConfigError for unknown names.
IdentityId identity_from_string(const std::string& name);

struct IdentitySides {
  BigRational lhs;
  BigRational rhs;
  /// AUX_HK only: the H_{n+k} variant of the left side.
  std::optional<BigRational> lhs_alt;
};

/// Both sides at n >= 1. GAUSS_APL is evaluated at x = 2; see gauss_apl.
IdentitySides eval_identity(IdentityId id, unsigned n);

/// sum_k (-n)_k (n+1)_k k / (k! (x)_k) and its closed form; x must avoid the
/// poles 0, -1, -2, ...
IdentitySides gauss_apl(unsigned n, const BigRational& x);

/// PASS iff lhs == rhs for all 1 <= n <= n_max (GAUSS_APL at x = 2, 3, 5/2).
CheckReport verify_identity(IdentityId id, unsigned n_max);

/// RHS-level combination laws for n <= n_max.
std::vector<CheckReport> verify_combinations(unsigned n_max);

enum class RecurrenceId { REC_SUMNMK, REC_SLAMBDA, REC_ALG, REC_FINAL };

const std::vector<RecurrenceId>& all_recurrences();
std::string to_string(RecurrenceId id);
RecurrenceId recurrence_from_string(const std::string& name);

/// One or more rows per recurrence (REC_SLAMBDA: one per sample lambda;
/// REC_ALG: raw and simplified; REC_FINAL: fitted and printed, informational).
std::vector<CheckReport> verify_recurrence(RecurrenceId id, unsigned n_max);

/// Fit of a(n) S(n+1) + b(n) S(n) = R(n) with deg a, deg b <= 2 by exact
/// elimination; S(n) = sum_{k=1}^n (-1)^k / CC(n, k).
struct OrderOneFit {
  std::vector<BigRational> a;  // ascending coefficients
  std::vector<BigRational> b;
  bool found = false;
};
OrderOneFit fit_final_recurrence(unsigned equations = 12);

/// Homogeneous and particular solutions of the SUMNMK recurrence and the
/// combination matching the sum.
std::vector<CheckReport> verify_solutions(unsigned n_max);

enum class CertificateId { CERT_SUMNMK, CERT_ALG };

const std::vector<CertificateId>& all_certificates();
std::string to_string(CertificateId id);
CertificateId certificate_from_string(const std::string& name);

/// g(n, k+1) - g(n, k) - sum_i c_i(n) f(n+i, k), or nullopt where a printed
/// denominator of g(n, k) or g(n, k+1) vanishes.
std::optional<BigRational> certificate_defect(CertificateId id, unsigned n, unsigned k);

/// Telescoping defects on the grid n <= n_max, 0 <= k <= n. CERT_ALG also
/// yields an informational row for the literal printed form.
std::vector<CheckReport> verify_certificate(CertificateId id, unsigned n_max);

}  // namespace supercong
