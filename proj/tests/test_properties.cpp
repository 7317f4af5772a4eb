#include <doctest.h>

#include "properties.hpp"

using namespace supercong;

TEST_SUITE("properties") {
  TEST_CASE("oracle integrality") {
    const auto o = props::oracle_integrality(13, 4);
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("two oracles agree") {
    const auto o = props::oracle_agreement(13, 3);
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("Jacobi sums have absolute value sqrt p") {
    const auto o = props::jacobi_magnitude(13);
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("Gamma table laws") {
    const auto o = props::gamma_table_laws(11, 3);
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("Gamma at one half squares to -phi(-1)") {
    const auto o = props::half_gamma(199);
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("kernel forms assemble to the binomial forms") {
    const auto o = props::kernel_assembly(23, {1, 3, 5});
    INFO(o.detail);
    CHECK(o.ok);
  }
  TEST_CASE("reports are deterministic and independent of jobs") {
    const auto o = props::report_determinism();
    INFO(o.detail);
    CHECK(o.ok);
  }
}
