#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "reference_oracle.hpp"
#include "simon/constants.hpp"
#include "simon/errors.hpp"

using simon::round_constant;
using simon::z_sequence;
using simon::ZSequence;

TEST_CASE("z sequences have length 62 and binary entries") {
  for (int j : {2, 3, 4}) {
    const ZSequence& z = z_sequence(j);
    CHECK(z.index == j);
    CHECK(z.length() == 62);
    for (auto b : z.bits) {
      CHECK((b == 0 || b == 1));
    }
  }
}

TEST_CASE("z tables equal the LFSR regeneration") {
  for (int j : {2, 3, 4}) {
    const ZSequence& z = z_sequence(j);
    const auto regen = refsim::z_sequence(j);
    for (std::size_t i = 0; i < 62; ++i) {
      CHECK(int(z.bits[i]) == regen[i]);
    }
  }
}

TEST_CASE("z sequences are pairwise distinct") {
  CHECK(z_sequence(2).bits != z_sequence(3).bits);
  CHECK(z_sequence(2).bits != z_sequence(4).bits);
  CHECK(z_sequence(3).bits != z_sequence(4).bits);
}

TEST_CASE("z lookup is pure and rejects bad indices") {
  CHECK(&z_sequence(2) == &z_sequence(2));
  CHECK(z_sequence(3).bits == z_sequence(3).bits);
  CHECK_THROWS_AS((void)z_sequence(0), simon::InvalidConfigError);
  CHECK_THROWS_AS((void)z_sequence(1), simon::InvalidConfigError);
  CHECK_THROWS_AS((void)z_sequence(5), simon::InvalidConfigError);
}

TEST_CASE("indexing wraps mod 62") {
  for (int j : {2, 3, 4}) {
    const ZSequence& z = z_sequence(j);
    for (std::size_t i = 0; i < 200; ++i) {
      CHECK(z.bit(i) == z.bits[i % 62]);
    }
  }
}

TEST_CASE("round constant") {
  CHECK(round_constant() == 0xFFFFFFFFFFFFFFFCull);
  CHECK((round_constant() ^ 0x3ull) == 0xFFFFFFFFFFFFFFFFull);
  CHECK(std::popcount(round_constant()) == 62);
}
