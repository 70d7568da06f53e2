#include <doctest.h>

#include "twistknot/invariants.hpp"
#include "twistknot/qsymbols.hpp"

using namespace twistknot;
using namespace twistknot::inv;
using qsym::brace_a_fall;
using qsym::factorial_factors;

namespace {

LaurentPoly2 mono(long c, int ea, int eq) {
  return LaurentPoly2::monomial(BigInt(c), ea, eq);
}

}  // namespace

TEST_CASE("H <-> R basis change") {
  const BasisChange bc = h_to_r(3);
  // H_0 = R_0
  CHECK(rat_eq(bc.h_from_r[0][0], QRational::one()));
  // R_1 = H_1 - {0;a}/{1}
  QRational c10(brace_a_fall(0, 1), factorial_factors(1));
  CHECK(rat_eq(bc.h_from_r[1][0], c10));
  CHECK(rat_eq(bc.r_from_h[1][0], -c10));
  // R_2 = H_2 - ({2;a}/{1}) R_1 - ({1;a}_2/{2}!) R_0
  CHECK(rat_eq(bc.h_from_r[2][1],
               QRational(brace_a_fall(2, 1), factorial_factors(1))));
  CHECK(rat_eq(bc.h_from_r[2][0],
               QRational(brace_a_fall(1, 2), factorial_factors(2))));
  // diagonal ones
  for (int i = 0; i <= 3; ++i)
    CHECK(rat_eq(bc.h_from_r[i][i], QRational::one()));
  // forward * inverse = identity (small n; the suite covers n <= 10)
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= i; ++j) {
      QRational prod;
      for (int k = j; k <= i; ++k)
        prod += bc.h_from_r[i][k] * bc.r_from_h[k][j];
      CHECK(rat_eq(prod, i == j ? QRational::one() : QRational()));
    }
}

TEST_CASE("omega coefficient sequences") {
  const auto w0 = omega_coeffs(0, 5);
  REQUIRE(w0.size() == 1);
  CHECK(rat_eq(w0[0], QRational::one()));

  const auto w = omega_coeffs(2, -1);
  REQUIRE(w.size() == 3);
  CHECK(rat_eq(w[0], QRational::one()));
  CHECK(rat_eq(w[1], QRational(mono(-1, -1, 0), factorial_factors(1))));
  CHECK(rat_eq(w[2], QRational(mono(1, -2, -1), factorial_factors(2))));
}

TEST_CASE("colored HOMFLY-PT of twist knots, color one") {
  // figure-eight
  CHECK(colored_homfly_twist(1, -1) ==
        LaurentPoly2::parse("a^2 - q^2 + 1 - q^-2 + a^-2"));
  // left-handed trefoil
  CHECK(colored_homfly_twist(1, 1) ==
        LaurentPoly2::parse("-a^4 + a^2*q^2 + a^2*q^-2"));
}

TEST_CASE("unknot and empty color") {
  for (int p = -3; p <= 3; ++p) CHECK(colored_homfly_twist(0, p).is_one());
  for (int n = 0; n <= 5; ++n) CHECK(colored_homfly_twist(n, 0).is_one());
  CHECK(colored_homfly_twist_formula(2, 0).is_one());
}

TEST_CASE("single-sum corollaries match the double sum") {
  CHECK(colored_homfly_fig8(0).is_one());
  CHECK(colored_homfly_trefoil(1) == colored_homfly_twist(1, 1));
  CHECK(colored_homfly_fig8(1) == colored_homfly_twist(1, -1));
  for (int n = 2; n <= 3; ++n) {
    CHECK(colored_homfly_trefoil(n) == colored_homfly_twist_formula(n, 1));
    CHECK(colored_homfly_fig8(n) == colored_homfly_twist_formula(n, -1));
  }
}

TEST_CASE("higher twists reduce to polynomials") {
  CHECK_FALSE(colored_homfly_twist(2, 2).is_zero());
  CHECK_FALSE(colored_homfly_twist(1, -2).is_zero());
}

TEST_CASE("colored Jones specialization") {
  LaurentPoly1 fig8;
  fig8.add_term(BigInt(1), 4);
  fig8.add_term(BigInt(1), -4);
  fig8.add_term(BigInt(-1), 2);
  fig8.add_term(BigInt(-1), -2);
  fig8.add_term(BigInt(1), 0);
  CHECK(colored_jones(1, -1, 2) == fig8);

  LaurentPoly1 trefoil;
  trefoil.add_term(BigInt(-1), 8);
  trefoil.add_term(BigInt(1), 6);
  trefoil.add_term(BigInt(1), 2);
  CHECK(colored_jones(1, 1, 2) == trefoil);

  CHECK(colored_jones(0, 2, 3).is_one());
  CHECK_THROWS_AS(colored_jones(1, 1, 1), IndexRange);
}

TEST_CASE("compute_twist wraps the query") {
  const InvariantResult r = compute_twist({.p = -1, .n = 1});
  CHECK(r.query.p == -1);
  CHECK(r.query.n == 1);
  CHECK(r.term_count == 5);
  CHECK(r.polynomial == colored_homfly_twist(1, -1));
  CHECK(r.millis >= 0.0);
}
