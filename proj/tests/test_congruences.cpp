#include <doctest.h>

#include "supercong/congruences.hpp"
#include "supercong/errors.hpp"

using namespace supercong;

TEST_SUITE("congruences") {
  TEST_CASE("component sums at small primes") {
    CHECK(X_eval({3, 1, 1}).value() == 2);
    CHECK(Y_eval({3, 1, 1}).value() == 0);
    CHECK(Z_eval({3, 1, 1}).value() == 8);
    CHECK(Z_eval({5, 1, 1}).value() == 101);
    CHECK(D_eval(5, 1).value() == 4);
    CHECK(D_eval(3, 1).value() == 0);
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(X_eval({9, 1, 1}), PreconditionError);
    CHECK_THROWS_AS(X_eval({7, 1, 7}), PreconditionError);
    CHECK_THROWS_AS(X_eval({7, 2, 1}), EvenNUnsupported);
  }

  TEST_CASE("corollary residues") {
    CHECK(corollary_lhs(3, 3).value() == 26);
    CHECK(corollary_lhs(5, 3).value() == 1);
    CHECK(corollary_lhs(7, 3).value() == 342);
    CHECK(corollary_lhs(11, 3).value() == 1330);
    CHECK(corollary_lhs(7, 4).value() == 2400);
    const CheckReport row = corollary_check(3, 3);
    CHECK(row.lhs == "26");
    CHECK(row.rhs == "26");
    CHECK(row.status == Status::Pass);
    CHECK_FALSE(row.informational);
    CHECK(corollary_check(3, 4).informational);
  }

  TEST_CASE("theorem at the smallest prime") {
    const CheckReport row = theorem_check({3, 1, 1});
    CHECK(row.status == Status::Pass);
    CHECK(row.lhs == "26");
    CHECK(row.rhs == "26");
    CHECK(theorem_check({5, 2, 3}).status == Status::Pass);
    CHECK(theorem_check({13, 4, 6}).status == Status::Pass);
  }

  TEST_CASE("kernel forms") {
    const auto table = GammaTable::build(RingDesc(11, 3));
    const KernelTerms odd(table, 3);
    CHECK(assembly_check(odd).status == Status::Pass);
    CHECK(equal_check(odd).status == Status::Pass);
    const KernelTerms even(table, 2);
    CHECK(equal_check(even).status == Status::Pass);
    CHECK(even.eval(KernelForm::Coe1, 4).ring() == RingDesc(11, 3));
    CHECK(even.eval(KernelForm::Coep, 4).ring() == RingDesc(11, 2));
    CHECK(even.eval(KernelForm::Coep2, 4).ring() == RingDesc(11, 1));
    const KernelTerms small(GammaTable::build(RingDesc(5, 3)), 1);
    CHECK_FALSE(small.has_ab());
    CHECK(assembly_check(small).status == Status::Skipped);
  }

  TEST_CASE("auxiliary forms") {
    for (std::uint64_t p : {3, 5, 7, 11, 13}) {
      CHECK(xd_check(p).status == Status::Pass);
      CHECK(yp_check(p).status == Status::Pass);
      CHECK(d_forms_check(p).status == Status::Pass);
    }
    CHECK(yeah_check(13, 2).status == Status::Pass);
    CHECK(special_value_check(GreeneOracle(7)).status == Status::Pass);
  }
}
