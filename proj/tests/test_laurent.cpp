#include <doctest.h>

#include "test_support.hpp"
#include "twistknot/laurent.hpp"
#include "twistknot/serialize.hpp"

using namespace twistknot;
using testsupport::random_factor;
using testsupport::random_poly;
using testsupport::Rng;

namespace {

LaurentPoly2 mono(long c, int ea, int eq) {
  return LaurentPoly2::monomial(BigInt(c), ea, eq);
}

LaurentPoly2 brace1() { return QFactor::brace(1).expand(); }

}  // namespace

TEST_CASE("monomial construction") {
  CHECK(mono(1, 0, 0).is_one());
  CHECK(mono(0, 5, -3).is_zero());
  CHECK(mono(-1, 2, 2).str() == "-a^2*q^2");
}

TEST_CASE("addition builds {1}") {
  LaurentPoly2 p = mono(1, 0, 1) + mono(-1, 0, -1);
  CHECK(p == brace1());
  CHECK(p.str() == "q - q^-1");
}

TEST_CASE("multiplicative identity and a hand product") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    CHECK(x * mono(1, 0, 0) == x);
  }
  // {1;a}{-1;a} = a^2 + a^-2 - q^2 - q^-2
  const LaurentPoly2 lhs =
      QFactor::brace_a(1).expand() * QFactor::brace_a(-1).expand();
  LaurentPoly2 rhs = mono(1, 2, 0) + mono(1, -2, 0);
  rhs += mono(-1, 0, 2) + mono(-1, 0, -2);
  CHECK(lhs == rhs);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(7);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    const LaurentPoly2 y = random_poly(rng);
    const LaurentPoly2 z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("mirror is an involutive ring homomorphism") {
  CHECK(mono(1, 0, 0).mirrored().is_one());
  CHECK(mono(1, 1, 2).mirrored() == mono(1, -1, -2));
  Rng rng(99);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    const LaurentPoly2 y = random_poly(rng);
    CHECK(x.mirrored().mirrored() == x);
    CHECK((x * y).mirrored() == x.mirrored() * y.mirrored());
    CHECK((x + y).mirrored() == x.mirrored() + y.mirrored());
  }
}

TEST_CASE("q -> -q^{-1} substitution is a ring homomorphism") {
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    const LaurentPoly2 y = random_poly(rng);
    CHECK((x * y).subst_neg_q_inv() == x.subst_neg_q_inv() * y.subst_neg_q_inv());
  }
  CHECK(brace1().subst_neg_q_inv() == brace1());  // {1} -> {1}
}

TEST_CASE("substitute_a") {
  // {0;a} at a=q^2 is q^2 - q^-2
  LaurentPoly1 expected;
  expected.add_term(BigInt(1), 2);
  expected.add_term(BigInt(-1), -2);
  CHECK(QFactor::brace_a(0).expand().substitute_a(2) == expected);

  CHECK(mono(1, 0, 0).substitute_a(5).is_one());

  // a^2 + a^-2 - q^2 - q^-2 + 1 at a=q^2
  LaurentPoly2 p = mono(1, 2, 0) + mono(1, -2, 0);
  p += mono(-1, 0, 2) + mono(-1, 0, -2) + mono(1, 0, 0);
  LaurentPoly1 e2;
  e2.add_term(BigInt(1), 4);
  e2.add_term(BigInt(1), -4);
  e2.add_term(BigInt(-1), 2);
  e2.add_term(BigInt(-1), -2);
  e2.add_term(BigInt(1), 0);
  CHECK(p.substitute_a(2) == e2);
}

TEST_CASE("divide_exact hand cases") {
  // {2}/{1} = q + q^-1
  const LaurentPoly2 b2 = QFactor::brace(2).expand();
  CHECK(divide_exact(b2, QFactor::brace(1)) == mono(1, 0, 1) + mono(1, 0, -1));

  CHECK(divide_exact(LaurentPoly2(), QFactor::brace(3)).is_zero());

  // ({0;a}^2 - {1}^2) / {1;a} = {-1;a}
  const LaurentPoly2 b0a = QFactor::brace_a(0).expand();
  LaurentPoly2 num = b0a * b0a - brace1() * brace1();
  CHECK(divide_exact(num, QFactor::brace_a(1)) == QFactor::brace_a(-1).expand());
}

TEST_CASE("divide_exact errors") {
  CHECK_THROWS_AS(divide_exact(brace1(), QFactor::brace(0)), ZeroFactor);
  CHECK_THROWS_AS(divide_exact(brace1(), QFactor::integer(BigInt(0))),
                  ZeroFactor);
  // a - a^-1 has no q dependence
  CHECK_THROWS_AS(divide_exact(QFactor::brace_a(0).expand(), QFactor::brace(1)),
                  NotDivisible);
  CHECK_THROWS_AS(divide_exact(mono(3, 0, 0), QFactor::integer(BigInt(2))),
                  NotDivisible);
}

TEST_CASE("divide_exact round-trips against multiplication") {
  Rng rng(5150);
  int nontrivial = 0;
  for (int t = 0; t < 200; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    const QFactor f = random_factor(rng);
    const LaurentPoly2 prod = x * f.expand();
    CHECK(divide_exact(prod, f) == x);
    if (!x.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 100);
}

TEST_CASE("factor products expand multiplicatively") {
  CHECK(FactorProduct().expand().is_one());
  Rng rng(31337);
  for (int t = 0; t < 40; ++t) {
    FactorProduct fp;
    LaurentPoly2 direct = mono(1, 0, 0);
    for (int j = rng.range(0, 3); j > 0; --j) {
      QFactor f = random_factor(rng);
      fp.mul(f);
      direct *= f.expand();
    }
    CHECK(fp.expand() == direct);
  }
}

TEST_CASE("qrational reduction") {
  // ({1}*{0;a}) / {1} = {0;a}
  FactorProduct den;
  den.mul(QFactor::brace(1));
  QRational r(brace1() * QFactor::brace_a(0).expand(), den);
  CHECK(r.reduced() == QFactor::brace_a(0).expand());

  // {0;a}/{1} is genuinely non-polynomial
  QRational bad(QFactor::brace_a(0).expand(), den);
  CHECK_THROWS_AS(bad.reduced(), NotDivisible);

  // zero over anything reduces to zero
  QRational z(LaurentPoly2(), den);
  CHECK(z.reduced().is_zero());
}

TEST_CASE("qrational equality by cross-multiplication") {
  FactorProduct den1;
  den1.mul(QFactor::brace(1));
  const QRational r1(QFactor::brace(2).expand(), den1);  // {2}/{1}
  const QRational r2(mono(1, 0, 1) + mono(1, 0, -1));    // q + q^-1
  CHECK(rat_eq(r1, r2));
  CHECK(rat_eq(r2, r1));
  CHECK_FALSE(rat_eq(QRational(brace1()), QRational(QFactor::brace(2).expand())));

  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly2 x = random_poly(rng);
    QRational a(x);
    // multiply numerator and denominator by the same factor: equal value
    QFactor f = random_factor(rng);
    QRational b(x * f.expand(), FactorProduct().mul(f));
    QRational c(x * f.expand() * f.expand(), FactorProduct().mul(f, 2));
    CHECK(rat_eq(a, a));
    CHECK(rat_eq(a, b));
    CHECK(rat_eq(b, c));
    CHECK(rat_eq(a, c));  // transitivity along the chain
  }
}

TEST_CASE("qrational arithmetic basics") {
  FactorProduct den;
  den.mul(QFactor::brace(1));
  QRational half(mono(1, 0, 0), den);  // 1/{1}
  QRational sum = half + half;
  CHECK(rat_eq(sum, QRational(mono(2, 0, 0), den)));
  QRational prod = half * QRational(brace1());
  CHECK(rat_eq(prod, QRational::one()));
  CHECK((half - half).is_zero());
}

TEST_CASE("canonical text format") {
  LaurentPoly2 p = mono(1, 2, 0) + mono(1, -2, 0);
  p += mono(-1, 0, 2) + mono(-1, 0, -2) + mono(1, 0, 0);
  CHECK(p.str() == "a^2 - q^2 + 1 - q^-2 + a^-2");
  CHECK(LaurentPoly2().str() == "0");
  CHECK(mono(-3, 1, -1).str() == "-3*a*q^-1");
  CHECK(mono(1, 0, 1).str() == "q");
}

TEST_CASE("text round-trip") {
  CHECK(LaurentPoly2::parse("0").is_zero());
  CHECK(LaurentPoly2::parse("a^2 - q^2 + 1 - q^-2 + a^-2").str() ==
        "a^2 - q^2 + 1 - q^-2 + a^-2");
  CHECK(LaurentPoly2::parse("q+q^-1") == mono(1, 0, 1) + mono(1, 0, -1));
  CHECK(LaurentPoly2::parse("2*a*q^2") == mono(2, 1, 2));
  Rng rng(64);
  for (int t = 0; t < 60; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    CHECK(LaurentPoly2::parse(x.str()) == x);
  }
}

TEST_CASE("json round-trip") {
  Rng rng(4096);
  for (int t = 0; t < 40; ++t) {
    const LaurentPoly2 x = random_poly(rng);
    CHECK(terms_from_json(terms_to_json(x)) == x);
  }
  // canonical ordering in the emitted array
  LaurentPoly2 p = mono(5, -1, 3) + mono(-2, 2, -4);
  const auto j = terms_to_json(p);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["a"] == 2);
  CHECK(j[0]["c"] == "-2");
  CHECK(j[1]["a"] == -1);
  CHECK(j[1]["c"] == "5");
}
