#include <doctest.h>

#include <thread>
#include <vector>

#include "twistknot/qsymbols.hpp"

using namespace twistknot;
using namespace twistknot::qsym;

TEST_CASE("brace symbols") {
  CHECK(brace(0).is_zero());
  CHECK(brace_a(0).str() == "a - a^-1");
  CHECK(brace(-2) == -brace(2));
  CHECK(brace(3).str() == "q^3 - q^-3");
  CHECK(brace_a(-1).str() == "a*q^-1 - a^-1*q");
}

TEST_CASE("product families") {
  CHECK(brace_fall(7, 0).is_one());
  CHECK(brace_fall(2, 2) == brace(2) * brace(1));
  CHECK(brace_a_fall(2, 3) == brace_a(2) * brace_a(1) * brace_a(0));
  CHECK(brace_a_rise(2, 2) == brace_a(-2) * brace_a(-1));
  CHECK(brace_a_rise(3, 0).is_one());
  CHECK(brace_fall(1, 3).is_zero());  // window crosses {0}
  CHECK_THROWS_AS(brace_fall(2, -1), NegativeLength);
  CHECK_THROWS_AS(brace_a_rise(2, -2), NegativeLength);
}

TEST_CASE("factorials") {
  CHECK(brace_factorial(0).is_one());
  CHECK(brace_factorial(3) == brace(3) * brace(2) * brace(1));
  CHECK_THROWS_AS(brace_factorial(-1), NegativeLength);
  CHECK(rat_eq(qint_factorial(0), QRational::one()));
  CHECK(qint_factorial(3).reduced() ==
        divide_exact(divide_exact(divide_exact(brace_factorial(3),
                                               QFactor::brace(1)),
                                  QFactor::brace(1)),
                     QFactor::brace(1)));
}

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).reduced().is_one());
  CHECK(qint(2).reduced().str() == "q + q^-1");
  CHECK(qint(-2).reduced() == -qint(2).reduced());
}

TEST_CASE("gaussian binomials") {
  CHECK(qbinomial_poly(5, 0).is_one());
  CHECK(qbinomial_poly(2, 1).str() == "q + q^-1");
  CHECK(qbinomial_poly(4, 2) ==
        LaurentPoly2::parse("q^4 + q^2 + 2 + q^-2 + q^-4"));
  CHECK_THROWS_AS(qbinomial(3, 4), IndexRange);
  CHECK_THROWS_AS(qbinomial(3, -1), IndexRange);
}

TEST_CASE("memo tables are safe under concurrent callers") {
  std::vector<LaurentPoly2> serial;
  for (int n = 0; n <= 9; ++n)
    for (int i = 0; i <= n; ++i) serial.push_back(qbinomial_poly(n, i));
  std::vector<std::vector<LaurentPoly2>> results(4);
  std::vector<std::thread> workers;
  for (auto& slot : results)
    workers.emplace_back([&slot] {
      for (int n = 0; n <= 9; ++n)
        for (int i = 0; i <= n; ++i) {
          slot.push_back(qbinomial_poly(n, i));
          (void)brace_fall(n, i);
          (void)brace_a_rise(n, i);
        }
    });
  for (auto& w : workers) w.join();
  for (const auto& slot : results) CHECK(slot == serial);
}

TEST_CASE("denominator factor builders") {
  CHECK(factorial_factors(0).is_one());
  CHECK(factorial_factors(3).expand() == brace_factorial(3));
  CHECK(brace_fall_factors(4, 2).expand() == brace_fall(4, 2));
  CHECK(brace_a_fall_factors(1, 3).expand() == brace_a_fall(1, 3));
  CHECK_THROWS_AS(brace_fall_factors(1, 3), ZeroFactor);  // hits {0}
}
