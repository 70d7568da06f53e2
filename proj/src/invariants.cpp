#include "twistknot/invariants.hpp"

#include <chrono>

#include "twistknot/coefficients.hpp"
#include "twistknot/qsymbols.hpp"

namespace twistknot::inv {

using qsym::brace_a_fall;
using qsym::brace_factorial;
using qsym::factorial_factors;
using qsym::qbinomial_poly;

BasisChange h_to_r(int n) {
  if (n < 0) throw IndexRange("h_to_r requires n >= 0");
  BasisChange bc;
  bc.h_from_r.resize(n + 1);
  bc.r_from_h.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    bc.h_from_r[i].resize(i + 1);
    for (int j = 0; j <= i; ++j) {
      // H_i = sum_j ({i-1+j;a}_{i-j}/{i-j}!) R_j
      bc.h_from_r[i][j] =
          QRational(brace_a_fall(i - 1 + j, i - j), factorial_factors(i - j));
    }
  }
  for (int i = 0; i <= n; ++i) {
    bc.r_from_h[i].resize(i + 1);
    bc.r_from_h[i][i] = QRational::one();
    for (int j = 0; j < i; ++j) {
      QRational v;
      for (int k = j; k < i; ++k) v += bc.h_from_r[i][k] * bc.r_from_h[k][j];
      bc.r_from_h[i][j] = -v;
    }
  }
  return bc;
}

std::vector<QRational> omega_coeffs(int n, int p) {
  if (n < 0) throw IndexRange("omega_coeffs requires n >= 0");
  std::vector<QRational> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back(coeff::t_p(i, p));
  return out;
}

LaurentPoly2 colored_homfly_twist_formula(int n, int p) {
  if (n < 0) throw IndexRange("color must be >= 0");
  QRational sum;
  for (int i = 0; i <= n; ++i) {
    QRational term = coeff::s_p(i, p);
    term.mul_monomial(BigInt(1), i, i * (i - 1) / 2);
    term.mul_poly(brace_factorial(i));
    term.mul_poly(qbinomial_poly(n, i));
    term.mul_poly(brace_a_fall(n + i - 1, i));
    term.mul_poly(brace_a_fall(i - 2, i));
    sum += term;
  }
  return sum.reduced();
}

LaurentPoly2 colored_homfly_twist(int n, int p) {
  if (n < 0) throw IndexRange("color must be >= 0");
  if (p == 0 || n == 0) return LaurentPoly2::constant(1);
  return colored_homfly_twist_formula(n, p);
}

LaurentPoly2 colored_homfly_trefoil(int n) {
  if (n < 0) throw IndexRange("color must be >= 0");
  LaurentPoly2 sum;
  for (int i = 0; i <= n; ++i) {
    LaurentPoly2 term = qbinomial_poly(n, i) * brace_a_fall(n + i - 1, i);
    term *= brace_a_fall(i - 2, i);
    term.mul_monomial(BigInt(i % 2 != 0 ? -1 : 1), 2 * i, i * (i - 1));
    sum += term;
  }
  return sum;
}

LaurentPoly2 colored_homfly_fig8(int n) {
  if (n < 0) throw IndexRange("color must be >= 0");
  LaurentPoly2 sum;
  for (int i = 0; i <= n; ++i) {
    LaurentPoly2 term = qbinomial_poly(n, i) * brace_a_fall(n + i - 1, i);
    term *= brace_a_fall(i - 2, i);
    sum += term;
  }
  return sum;
}

LaurentPoly1 colored_jones(int n, int p, int N) {
  if (N < 2) throw IndexRange("specialization level N must be >= 2");
  return colored_homfly_twist(n, p).substitute_a(N);
}

InvariantResult compute_twist(const TwistKnotQuery& query) {
  const auto start = std::chrono::steady_clock::now();
  InvariantResult r;
  r.query = query;
  r.polynomial = colored_homfly_twist(query.n, query.p);
  r.term_count = r.polynomial.term_count();
  r.millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

}  // namespace twistknot::inv
