#pragma once

/**
 * @file runner.hpp
 * @brief Batch scans behind the command line driver.
 *
 * Work is split into independent per-prime (or per-id) tasks, run on a
 * bounded pool, and merged in task order, so the report does not depend on
 * the number of jobs.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "supercong/report.hpp"

namespace supercong {

inline constexpr std::uint64_t kCorollaryDefaultMax = 5000;
inline constexpr std::uint64_t kTheoremDefaultMax = 31;
inline constexpr std::uint64_t kLemmasDefaultMax = 199;
inline constexpr std::uint64_t kHarmonicLemmaCap = 97;
inline constexpr std::uint64_t kKernelCap = 31;
inline constexpr std::uint64_t kSpecialValueCap = 61;
inline constexpr unsigned kIdentityDefaultMaxN = 200;
inline constexpr unsigned kHalfSumDefaultMaxN = 100;
inline constexpr unsigned kRecurrenceDefaultMaxN = 100;
inline constexpr unsigned kSolutionDefaultMaxN = 50;
inline constexpr unsigned kCertificateDefaultMaxN = 60;

struct RunConfig {
  std::string subcommand;
  std::optional<std::uint64_t> max_prime;
  std::optional<unsigned> mod_power;
  std::vector<unsigned> n_list;         // empty: subcommand default
  std::vector<std::uint64_t> lambdas;   // empty: every lambda in [1, p-1]
  std::vector<std::string> ids;         // identity, recurrence, SOLUTIONS, COMBINATIONS or "all"
  std::vector<std::string> certs;       // certificate ids or "all"
  std::optional<unsigned> max_n;
  unsigned jobs = 1;
  bool force = false;
  bool no_timestamp = false;
  bool nasty = false;
  std::optional<unsigned> k;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

using Task = std::function<std::vector<CheckReport>()>;

/// Runs tasks on up to `jobs` threads and concatenates their rows in task
/// order. The first exception in task order is rethrown.
std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs);

RunReport cmd_corollary(const RunConfig& config);
RunReport cmd_theorem(const RunConfig& config);
RunReport cmd_lemmas(const RunConfig& config);
RunReport cmd_identities(const RunConfig& config);
/// Every family with its defaults.
RunReport cmd_report(const RunConfig& config);

/// Dispatches on config.subcommand and fills timestamp and wall time unless
/// no_timestamp is set.
RunReport run(const RunConfig& config);

}  // namespace supercong
