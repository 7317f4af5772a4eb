#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercong/bigint.hpp"
#include "supercong/modarith.hpp"

namespace supercong {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Outcome of one verification. Residues and rationals are kept as decimal
/// strings so every family shares one row shape.
struct CheckReport {
  std::string family;
  std::optional<std::uint64_t> p;
  std::optional<std::int64_t> n;
  std::optional<std::string> lambda;
  std::string modulus;
  std::string lhs;
  std::string rhs;
  Status status = Status::Skipped;
  std::string note;
  /// Informational rows (conjecture scans, printed-form diagnostics) never
  /// affect the exit code.
  bool informational = false;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// PASS iff lhs == rhs; the residues must share a ring.
CheckReport compare(std::string family, const Residue& lhs, const Residue& rhs);
CheckReport compare(std::string family, const BigRational& lhs, const BigRational& rhs);
CheckReport skipped(std::string family, std::string reason);

/// Folds a per-point sweep into one row: the first failing point, or the
/// last point when every point passed.
class Sweep {
 public:
  explicit Sweep(std::string family) : family_(std::move(family)) {}

  /// The point's note should identify it (for example "j=3").
  void add(CheckReport point);
  bool failed() const noexcept { return first_fail_.has_value(); }
  std::size_t points() const noexcept { return points_; }
  CheckReport result(const std::string& pass_note) const;

 private:
  std::string family_;
  std::optional<CheckReport> first_fail_;
  std::optional<CheckReport> last_;
  std::size_t points_ = 0;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  std::size_t informational_fail = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary summarize(const std::vector<CheckReport>& checks);

enum class Format { Json, Csv, Human };

Format format_from_string(const std::string& s);

struct RunReport {
  std::string subcommand;
  /// Ordered key/value echo of the effective configuration.
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckReport> checks;
  std::optional<std::string> timestamp;
  std::optional<std::int64_t> wall_ms;

  Summary summary() const { return summarize(checks); }
  /// 0 when no asserted row failed, 1 otherwise.
  int exit_code() const;
};

std::string emit_report(const RunReport& report, Format format);

/// Inverse of the CSV emitter for the tabular columns.
std::vector<CheckReport> parse_csv(const std::string& text);

}  // namespace supercong
