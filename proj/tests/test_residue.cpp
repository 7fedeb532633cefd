#include <doctest.h>

#include "nilcollect/residue.hpp"

using namespace nilcollect;

TEST_CASE("p-adic valuation") {
  CHECK(padic_valuation(10518300, 2) == 2);  // C(32,8) = 4 * 2629575
  CHECK(padic_valuation(351, 3) == 3);       // 351 = 27 * 13
  CHECK(padic_valuation(1, 7) == 0);
  CHECK(padic_valuation(-24, 2) == 3);
  for (unsigned k = 1; k <= 10; ++k) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), 3, k);
    CHECK(padic_valuation(q, 3) == k);
  }
  CHECK_THROWS_AS(padic_valuation(0, 2), std::invalid_argument);
}

TEST_CASE("exact binomials") {
  CHECK(binom(32, 8) == 10518300);
  CHECK(binom(27, 2) == 351);
  CHECK(binom(256, 2) == 32640);
  CHECK(binom(5, 9) == 0);
}

TEST_CASE("scaled residues") {
  CHECK(binom_residue(32, 8, 2, 3, 8) == 7);   // C(32,8)/4 = 2629575 = -1 mod 8
  CHECK(binom_residue(32, 12, 2, 3, 8) == 2);
  CHECK(binom_residue(27, 2, 3, 0, 9) == 4);   // C(27,2)/27 = 13 = 4 mod 9
  CHECK_THROWS(binom_residue(16, 2, 2, 0, 8)); // C(16,2)=120 is not divisible by 16
  CHECK_THROWS(binom_residue(32, 8, 2, 9, 8)); // 2^9 does not divide 32
}

TEST_CASE("stability across k") {
  SUBCASE("odd d vanishes mod 8") {
    for (unsigned d : {1u, 3u, 5u, 7u, 9u, 11u, 13u}) {
      auto rep = verify_residue_stability(2, d, 3, 8, 5, 12);
      CHECK(rep.stable);
      CHECK(rep.residue == 0);
    }
  }
  SUBCASE("quoted even-d residues") {
    auto r8 = verify_residue_stability(2, 8, 3, 8, 5, 12);
    CHECK(r8.stable);
    CHECK(r8.residue == 7);
    auto r12 = verify_residue_stability(2, 12, 3, 8, 5, 12);
    CHECK(r12.stable);
    CHECK(r12.residue == 2);
  }
  SUBCASE("3-power residues stable mod 9") {
    for (unsigned d = 1; d <= 13; ++d) CHECK(verify_residue_stability(3, d, 2, 9, 3, 10).stable);
    auto c2 = verify_residue_stability(3, 2, 0, 9, 3, 10);
    CHECK(c2.stable);
    CHECK(c2.residue == 4);
  }
  SUBCASE("rows are recorded") {
    auto rep = verify_residue_stability(2, 8, 3, 8, 5, 7);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].q == 32);
    CHECK(rep.rows[0].binom == 10518300);
    CHECK(rep.rows[0].scaled == 2629575);
  }
}

TEST_CASE("divisibility bands") {
  for (unsigned k = 5; k <= 10; ++k) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), 2, k);
    for (unsigned d = 2; d <= 3; ++d) CHECK(binom(q, d) % (q / 2) == 0);
    for (unsigned d = 2; d <= 7; ++d) CHECK(binom(q, d) % (q / 4) == 0);
    for (unsigned d = 2; d <= 15; ++d) CHECK(binom(q, d) % (q / 8) == 0);
  }
  for (unsigned k = 3; k <= 8; ++k) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), 3, k);
    for (unsigned d = 1; d <= 2; ++d) CHECK(binom(q, d) % q == 0);
    for (unsigned d = 1; d <= 8; ++d) CHECK(binom(q, d) % (q / 3) == 0);
    for (unsigned d = 1; d <= 26; ++d) CHECK(binom(q, d) % (q / 9) == 0);
  }
  for (unsigned k = 2; k <= 7; ++k) {
    Int q;
    mpz_ui_pow_ui(q.get_mpz_t(), 5, k);
    for (unsigned d = 1; d <= 4; ++d) CHECK(binom(q, d) % q == 0);
    for (unsigned d = 1; d <= 24; ++d) CHECK(binom(q, d) % (q / 5) == 0);
  }
}
