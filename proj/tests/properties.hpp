#pragma once

// Property sweeps shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace supercong::props {

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample

  void expect(bool cond, const std::string& where) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = where;
    }
  }
};

Outcome oracle_integrality(std::uint64_t max_p, unsigned max_n);
Outcome oracle_agreement(std::uint64_t max_p, unsigned max_n);
Outcome jacobi_magnitude(std::uint64_t max_p);
Outcome gamma_table_laws(std::uint64_t max_p, unsigned max_k);
Outcome half_gamma(std::uint64_t max_p);
Outcome kernel_assembly(std::uint64_t max_p, const std::vector<unsigned>& odd_ns);
Outcome report_determinism();

}  // namespace supercong::props
