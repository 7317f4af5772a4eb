#include <doctest.h>

#include "supercong/harmonic.hpp"

using namespace supercong;

TEST_SUITE("harmonic") {
  TEST_CASE("exact values") {
    CHECK(harmonic(3, 1) == make_rational(11, 6));
    CHECK(harmonic(2, 2) == make_rational(5, 4));
    CHECK(harmonic(0, 1) == 0);
    const HarmonicTable t(1, 10);
    for (unsigned n = 0; n <= 10; ++n) CHECK(t[n] == harmonic(n, 1));
  }

  TEST_CASE("residues") {
    // H_3 = 11/6 modulo 7: 11 * 6^-1 = 4 * 6 = 24 = 3
    CHECK(harmonic_mod(3, 1, RingDesc(7, 1)).value() == 3);
    CHECK(harmonic_mod(6, 1, RingDesc(7, 1)).value() == 0);
    CHECK(harmonic_mod(2, 1, RingDesc(5, 2)).value() == 14);
    const RingDesc r(11, 2);
    const ModHarmonicTable t(2, 10, r);
    for (unsigned n = 0; n <= 10; ++n) CHECK(t[n] == Residue::from_rational(harmonic(n, 2), r));
  }

  TEST_CASE("odd square sums") {
    // 1 + 1/9 = 10/9 modulo 49
    CHECK(odd_square_sum(2, RingDesc(7, 2)) == Residue::from_rational(make_rational(10, 9), RingDesc(7, 2)));
    CHECK(odd_square_sum(0, RingDesc(7, 2)).value() == 0);
  }
}
