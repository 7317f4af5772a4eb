#include <doctest.h>

#include "supercong/errors.hpp"
#include "supercong/padic.hpp"

using namespace supercong;

namespace {

// (-1)^n prod_{j<n, p !| j} j, computed directly.
std::uint64_t gamma_direct(std::uint64_t n, const RingDesc& r) {
  Residue acc(1, r);
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % r.p() != 0) acc *= Residue::from_u64(j, r);
  }
  return (n % 2 == 0 ? acc : -acc).value();
}

}  // namespace

TEST_SUITE("padic") {
  TEST_CASE("table matches the defining product") {
    for (std::uint64_t p : {3, 5, 7}) {
      const RingDesc r(p, 2);
      const auto t = GammaTable::build(r);
      CHECK(t->size() == r.modulus());
      for (std::uint64_t n = 0; n < r.modulus(); ++n) CHECK(t->at(n).value() == gamma_direct(n, r));
    }
  }

  TEST_CASE("known values") {
    const auto t7 = GammaTable::build(RingDesc(7, 1));
    CHECK(t7->at(0).value() == 1);
    CHECK(t7->at(4).value() == 6);
    const auto t5 = GammaTable::build(RingDesc(5, 2));
    CHECK((*t5)(PadicPoint::from_fraction(3, 2, RingDesc(5, 2))).value() == 16);
  }

  TEST_CASE("x0 lies in [1, p]") {
    const RingDesc r(5, 2);
    CHECK(PadicPoint::from_integer(10, r).x0() == 5);
    CHECK(PadicPoint::from_integer(7, r).x0() == 2);
    CHECK(PadicPoint::from_fraction(1, 2, r).x0() == 3);
  }

  TEST_CASE("precision ceiling") {
    CHECK_THROWS_AS(GammaTable::build(RingDesc(3, 6)), PrecisionError);
    CHECK_THROWS_AS(g1_g2(PadicPoint::from_integer(1, RingDesc(5, 3)), *GammaTable::build(RingDesc(5, 3))),
                    PreconditionError);
  }

  TEST_CASE("lemmas at small primes") {
    CHECK(verify_lemma_bc(3).status == Status::Pass);
    CHECK(verify_lemma_bc(101).status == Status::Pass);
    CHECK(verify_lemma_har(5, 1).status == Status::Skipped);
    CHECK(verify_lemma_har(11, 2).status == Status::Pass);
    CHECK(half_gamma_check(13).status == Status::Pass);
    CHECK(mandy_check(*GammaTable::build(RingDesc(13, 2)), 3).status == Status::Pass);
  }

  TEST_CASE("exact expansion against the oracle at p = 3") {
    // -p * 2F1(1) = -1 at p = 3, i.e. 26 modulo 27
    CHECK(nasty_rhs(1, 1, 3, 3).value() == 26);
    CHECK_THROWS_AS(nasty_rhs(2, 1, 3, 3), EvenNUnsupported);
  }
}
