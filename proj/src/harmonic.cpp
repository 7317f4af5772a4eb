#include "supercong/harmonic.hpp"

#include <string>

#include "supercong/errors.hpp"

namespace supercong {

namespace {

void require_order(unsigned order) {
  if (order == 0) throw PreconditionError("harmonic order must be positive");
}

}  // namespace

BigRational harmonic(std::uint64_t n, unsigned order) {
  require_order(order);
  BigRational sum(0);
  for (std::uint64_t j = 1; j <= n; ++j) {
    sum += BigRational(BigInt(1), ipow(big_from_u64(j), order));
  }
  sum.canonicalize();
  return sum;
}

Residue harmonic_mod(std::uint64_t n, unsigned order, const RingDesc& ring) {
  require_order(order);
  if (n >= ring.p()) {
    throw RangeError("harmonic_mod: n = " + std::to_string(n) + " would include 1/p");
  }
  Residue sum(0, ring);
  for (std::uint64_t j = 1; j <= n; ++j) {
    sum += Residue::from_u64(j, ring).pow(order).inverse();
  }
  return sum;
}

Residue odd_square_sum(std::uint64_t j, const RingDesc& ring) {
  Residue sum(0, ring);
  for (std::uint64_t r = 0; r < j; ++r) {
    Residue odd = Residue::from_u64(2 * r + 1, ring);
    if (!odd.is_unit()) {
      throw RangeError("odd_square_sum: term 2r+1 = " + std::to_string(2 * r + 1) +
                       " is divisible by p");
    }
    sum += (odd * odd).inverse();
  }
  return sum;
}

HarmonicTable::HarmonicTable(unsigned order, std::size_t bound) : order_(order) {
  require_order(order);
  values_.reserve(bound + 1);
  values_.emplace_back(0);
  for (std::size_t j = 1; j <= bound; ++j) {
    BigRational next = values_.back() + BigRational(BigInt(1), ipow(big_from_u64(j), order));
    next.canonicalize();
    values_.push_back(std::move(next));
  }
}

ModHarmonicTable::ModHarmonicTable(unsigned order, std::size_t bound, const RingDesc& ring)
    : order_(order), ring_(ring) {
  require_order(order);
  if (bound >= ring.p()) {
    throw RangeError("ModHarmonicTable: bound must be below p");
  }
  values_.reserve(bound + 1);
  values_.push_back(0);
  Residue acc(0, ring);
  for (std::size_t j = 1; j <= bound; ++j) {
    acc += Residue::from_u64(j, ring).pow(order).inverse();
    values_.push_back(acc.value());
  }
}

Residue ModHarmonicTable::operator[](std::size_t n) const {
  return Residue::from_u64(values_.at(n), ring_);
}

}  // namespace supercong
