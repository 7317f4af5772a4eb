#pragma once

#include <cstddef>
#include <vector>

#include "supercong/bigint.hpp"
#include "supercong/modarith.hpp"

namespace supercong {

/// H_n^(i) = sum_{j=1}^{n} 1/j^i exactly; H_0^(i) = 0.
BigRational harmonic(std::uint64_t n, unsigned order);

/// H_n^(i) with every denominator inverted modulo p^k. Requires n <= p-1.
Residue harmonic_mod(std::uint64_t n, unsigned order, const RingDesc& ring);

/// sum_{r=0}^{j-1} 1/(2r+1)^2 modulo p^k; the empty sum (j = 0) is 0.
Residue odd_square_sum(std::uint64_t j, const RingDesc& ring);

/// Exact prefix table H_0^(i) .. H_bound^(i). Immutable once built.
class HarmonicTable {
 public:
  HarmonicTable(unsigned order, std::size_t bound);

  unsigned order() const noexcept { return order_; }
  std::size_t bound() const noexcept { return values_.size() - 1; }
  const BigRational& operator[](std::size_t n) const { return values_.at(n); }

 private:
  unsigned order_;
  std::vector<BigRational> values_;
};

/// Prefix table of H_n^(i) modulo p^k for n <= bound <= p-1.
class ModHarmonicTable {
 public:
  ModHarmonicTable(unsigned order, std::size_t bound, const RingDesc& ring);

  unsigned order() const noexcept { return order_; }
  const RingDesc& ring() const noexcept { return ring_; }
  std::size_t bound() const noexcept { return values_.size() - 1; }
  Residue operator[](std::size_t n) const;

 private:
  unsigned order_;
  RingDesc ring_;
  std::vector<std::uint64_t> values_;
};

}  // namespace supercong
