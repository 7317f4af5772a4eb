#include <doctest.h>

#include "supercong/errors.hpp"
#include "supercong/modarith.hpp"

using namespace supercong;

TEST_SUITE("modarith") {
  TEST_CASE("prime sieve") {
    CHECK(primes_up_to(5000).size() == 669);
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(is_prime(4999));
    CHECK_FALSE(is_prime(4997 * 1ULL * 3));
    CHECK(is_prime((1ULL << 61) - 1));
  }

  TEST_CASE("inverses modulo 27") {
    const RingDesc r(3, 3);
    CHECK(Residue(16, r).inverse().value() == 22);
    CHECK(Residue(4, r).inverse().value() == 7);
    CHECK_THROWS_AS(Residue(6, r).inverse(), NotInvertible);
    for (std::int64_t a = 1; a < 27; ++a) {
      if (a % 3 == 0) continue;
      CHECK((Residue(a, r) * Residue(a, r).inverse()).value() == 1);
    }
  }

  TEST_CASE("ring mismatch") {
    CHECK_THROWS(Residue(1, RingDesc(3, 2)) + Residue(1, RingDesc(3, 3)));
    CHECK(Residue(-1, RingDesc(5, 2)).value() == 24);
    CHECK(Residue(24, RingDesc(5, 2)).signed_value() == -1);
    CHECK(Residue(30, RingDesc(5, 3)).reduce_to(1).value() == 0);
  }

  TEST_CASE("legendre symbol") {
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
    CHECK(legendre(3, 11) == 1);
    CHECK(legendre(22, 11) == 0);
  }

  TEST_CASE("teichmuller lift") {
    CHECK(teichmuller(2, 5, 2).value() == 7);
    for (std::uint64_t p : {5, 7, 13}) {
      for (std::int64_t lam = 1; lam < static_cast<std::int64_t>(p); ++lam) {
        const Residue w = teichmuller(lam, p, 3);
        CHECK(w.pow(static_cast<std::int64_t>(p - 1)).value() == 1);
        CHECK(w.reduce_to(1).value() == static_cast<std::uint64_t>(lam));
      }
    }
  }

  TEST_CASE("binomials modulo prime powers") {
    CHECK(binomial_mod(4, 2, RingDesc(5, 3)).value() == 6);
    const FactorialTable f(12, RingDesc(13, 2));
    CHECK(f.binomial(12, 5).value() == 792 % 169);
    CHECK((f.factorial(7) * f.inverse_factorial(7)).value() == 1);
  }
}
