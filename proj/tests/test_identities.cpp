#include <doctest.h>

#include "supercong/errors.hpp"
#include "supercong/identities.hpp"

using namespace supercong;

TEST_SUITE("identities") {
  TEST_CASE("small cases") {
    CHECK(eval_identity(IdentityId::OLD, 1).lhs == -2);
    CHECK(eval_identity(IdentityId::COOL, 2).lhs == 5);
    CHECK(eval_identity(IdentityId::REL2, 1).lhs == 0);
    CHECK(eval_identity(IdentityId::SUMNMK, 3).lhs == 42);
    CHECK(eval_identity(IdentityId::SUMNMK, 4).lhs == make_rational(-560, 3));
    CHECK(eval_identity(IdentityId::ALGSUM2, 3).lhs == make_rational(-1, 10));
    CHECK(eval_identity(IdentityId::AUX_INV, 4).lhs == make_rational(-1, 1120));
    CHECK(gauss_apl(3, make_rational(5, 2)).lhs == make_rational(-8, 35));
    CHECK(eval_identity(IdentityId::SHALF_ODD, 2).lhs == make_rational(-47, 32));
    CHECK(eval_identity(IdentityId::SHALF_EVEN, 2).lhs == make_rational(8, 3));
    const auto hk = eval_identity(IdentityId::AUX_HK, 5);
    REQUIRE(hk.lhs_alt);
    CHECK(*hk.lhs_alt == hk.rhs);
  }

  TEST_CASE("names round-trip") {
    for (IdentityId id : all_identities()) CHECK(identity_from_string(to_string(id)) == id);
    for (RecurrenceId id : all_recurrences()) CHECK(recurrence_from_string(to_string(id)) == id);
    for (CertificateId id : all_certificates()) CHECK(certificate_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(identity_from_string("NOPE"), ConfigError);
    CHECK(all_identities().size() == 15);
  }

  TEST_CASE("verification at moderate n") {
    for (IdentityId id : all_identities()) CHECK(verify_identity(id, 30).status == Status::Pass);
    for (const auto& row : verify_combinations(30)) CHECK(row.status == Status::Pass);
  }

  TEST_CASE("order-one fit") {
    const OrderOneFit fit = fit_final_recurrence();
    REQUIRE(fit.found);
    CHECK(fit.a == std::vector<BigRational>{0, 0, 1});
    CHECK(fit.b == std::vector<BigRational>{4, 4, 1});
    const auto rows = verify_recurrence(RecurrenceId::REC_FINAL, 20);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].status == Status::Pass);
    CHECK(rows[1].status == Status::Fail);
    CHECK(rows[0].informational);
    CHECK(rows[1].informational);
  }

  TEST_CASE("solutions") {
    const auto rows = verify_solutions(20);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) CHECK(row.status == Status::Pass);
    CHECK(rows[3].note.find("c1=-1, c2=1") != std::string::npos);
  }

  TEST_CASE("certificate defects") {
    CHECK(*certificate_defect(CertificateId::CERT_SUMNMK, 5, 2) == 0);
    CHECK(*certificate_defect(CertificateId::CERT_ALG, 6, 3) == 0);
    CHECK_FALSE(certificate_defect(CertificateId::CERT_SUMNMK, 5, 5));
    CHECK_FALSE(certificate_defect(CertificateId::CERT_ALG, 6, 6));
    const auto alg = verify_certificate(CertificateId::CERT_ALG, 12);
    REQUIRE(alg.size() == 2);
    CHECK(alg[0].status == Status::Pass);
    CHECK(alg[1].informational);
    CHECK(alg[1].status == Status::Fail);
  }
}
