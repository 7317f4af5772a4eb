#include <doctest.h>

#include "supercong/cyclotomic.hpp"
#include "supercong/errors.hpp"
#include "supercong/modarith.hpp"

using namespace supercong;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ints({-1, 1}));
    CHECK(cyclotomic_poly(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_poly(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == ints({1, 0, -1, 0, 1}));
    CHECK(euler_phi(60) == 16);
  }

  TEST_CASE("ring arithmetic") {
    auto ring = CycRing::make(6);
    const CycInt z = ring->zeta_power(1);
    CHECK(z.pow(6) == ring->from_integer(1));
    CHECK(z.pow(3) == ring->from_integer(-1));
    CHECK((z * z.conjugate()) == ring->from_integer(1));
    CHECK((z + z.conjugate()).is_rational());
    CHECK_FALSE(z.is_rational());
  }

  TEST_CASE("primitive roots") {
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
    CHECK(primitive_root(23) == 5);
  }

  TEST_CASE("Jacobi sums") {
    const CharacterGroup g(3);
    const CycInt j = g.jacobi_sum(g.quadratic(), g.trivial());
    CHECK(j == g.ring()->from_integer(-1));
    for (std::uint64_t p : {5, 7, 11}) {
      const CharacterGroup gp(p);
      CHECK(gp.jacobi_sum(gp.trivial(), gp.trivial()) == gp.ring()->from_integer(static_cast<long>(p) - 2));
      // J(phi, phi) = -phi(-1)
      CHECK(gp.jacobi_sum(gp.quadratic(), gp.quadratic()) ==
            gp.ring()->from_integer(-legendre(-1, p)));
    }
  }

  TEST_CASE("oracle values against an independent character-sum evaluation") {
    // p^n F_n(lambda), lambda = 1..p-1, from a floating-point evaluation of
    // the character-binomial definition.
    CHECK(GreeneOracle(7).values(3) ==
          ints({-31, 16, 8, 16, -8, 0}));
    CHECK(GreeneOracle(11).values(2) == ints({0, 7, -11, 11, -5, 7, 5, 5, 5, -25}));
    CHECK(GreeneOracle(5).values(1) == ints({-1, 2, -2, 2}));
    CHECK(hypergeometric_int(1, 1, 3) == 1);
  }

  TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(GreeneOracle(67), GuardExceeded);
    CHECK_NOTHROW(GreeneOracle(67, 67));
  }
}
