#include "twistknot/coefficients.hpp"

#include <algorithm>

#include "twistknot/qsymbols.hpp"

namespace twistknot::coeff {

using qsym::brace;
using qsym::brace_a;
using qsym::brace_a_fall;
using qsym::brace_a_fall_factors;
using qsym::brace_a_rise;
using qsym::brace_factorial;
using qsym::brace_fall;
using qsym::brace_fall_factors;
using qsym::factorial_factors;
using qsym::qbinomial_poly;

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw IndexRange(what);
}

LaurentPoly2 sign_monomial(bool negative, int ea, int eq) {
  return LaurentPoly2::monomial(BigInt(negative ? -1 : 1), ea, eq);
}

}  // namespace

QRational x_coeff(int m, int n, int i) {
  require(m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n),
          "x_coeff requires 0 <= i <= min(m, n)");
  LaurentPoly2 num = qbinomial_poly(m, i) * qbinomial_poly(n, i);
  num *= brace_factorial(i);
  if (i % 2 != 0) num = -num;
  return QRational(std::move(num), brace_a_fall_factors(m + n - 2, i));
}

QRational alpha(int m, int n, int i) {
  require(m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n),
          "alpha requires 0 <= i <= min(m, n)");
  const long long eq = -static_cast<long long>(i) * (m + n) +
                       static_cast<long long>(i) * (i + 3) / 2;
  LaurentPoly2 num = brace_fall(m, i) * brace_fall(n, i);
  num *= sign_monomial(i % 2 != 0, -i, static_cast<int>(eq));
  return QRational(std::move(num), factorial_factors(i));
}

QRational alpha_bar(int m, int n, int i) {
  require(m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n),
          "alpha_bar requires 0 <= i <= min(m, n)");
  const long long eq = static_cast<long long>(i) * (m + n) -
                       static_cast<long long>(i) * (i + 3) / 2;
  LaurentPoly2 num = brace_fall(m, i) * brace_fall(n, i);
  num *= sign_monomial(false, i, static_cast<int>(eq));
  return QRational(std::move(num), factorial_factors(i));
}

QRational beta(int i, int j, int m, int n, int k, BetaVariant variant) {
  require(0 <= k && k <= i && i <= j && j <= std::min(m, n),
          "beta requires 0 <= k <= i <= j <= min(m, n)");
  return beta_formula(i, j, m, n, k, variant);
}

QRational beta_formula(int i, int j, int m, int n, int k, BetaVariant variant) {
  require(0 <= k && k <= i && i <= std::min(m, n),
          "beta requires 0 <= k <= i <= min(m, n)");
  LaurentPoly2 num = brace_fall(m - j, k) * brace_fall(n - j, k);
  num *= brace_fall(j, i - k);
  num *= qbinomial_poly(i, k);
  num *= brace_a_fall(m + n - j - k - 1, i - k);
  FactorProduct den = brace_fall_factors(m, i);
  den.mul(brace_fall_factors(n, i));
  QRational r(std::move(num), std::move(den));
  if (variant == BetaVariant::Antisym) r = r.subst_neg_q_inv();
  return r;
}

QRational y_coeff(int m, int n, int i) {
  require(m >= 0 && n >= 0 && i >= 0 && i <= std::min(m, n),
          "y_coeff requires 0 <= i <= min(m, n)");
  LaurentPoly2 num = brace_fall(m, i) * brace_fall(n, i);
  FactorProduct den = factorial_factors(i);
  den.mul(brace_a_fall_factors(m + n - i - 1, i));
  return QRational(std::move(num), std::move(den));
}

long long epsilon_exp(int i, int n, int j, int k) {
  const long long jj = j, kk = k;
  return (kk - jj) * (i + n) + jj * (jj + 3) / 2 - kk * (kk + 3) / 2;
}

LaurentPoly2 eta(int n, int k) { return brace(n - k) * brace_a(n + k - 1); }

QRational sigma(int n, int i) {
  require(n >= 0 && i >= 0, "sigma requires n, i >= 0");
  QRational sum;
  // off-diagonal pairs j < k with j + k <= i
  for (int j = 0; 2 * j + 1 <= i; ++j) {
    for (int k = j + 1; j + k <= i; ++k) {
      LaurentPoly2 pre =
          sign_monomial(j % 2 != 0, k - j,
                        static_cast<int>(epsilon_exp(i, n, j, k)));
      pre += sign_monomial(k % 2 != 0, j - k,
                           static_cast<int>(epsilon_exp(i, n, k, j)));
      LaurentPoly2 num = pre * brace_fall(n, j);
      num *= brace_fall(n, k);
      num *= brace_a_fall(i - 1, i - j - k);
      sum += QRational(std::move(num), factorial_factors(i - j - k));
    }
  }
  // diagonal j = k
  for (int j = 0; 2 * j <= i; ++j) {
    LaurentPoly2 num = brace_fall(n, j) * brace_fall(n, j);
    num *= brace_a_fall(i - 1, i - 2 * j);
    if (j % 2 != 0) num = -num;
    sum += QRational(std::move(num), factorial_factors(i - 2 * j));
  }
  return sum;
}

QRational tau(int n, int i) {
  require(n >= 0 && i >= 0, "tau requires n, i >= 0");
  QRational r(brace_a_rise(i - 1, i), factorial_factors(i));
  if (i >= 1) {
    LaurentPoly2 num = brace_a_rise(i, i - 1) * brace(n);
    num *= brace_a(n - 1);
    r += QRational(std::move(num), factorial_factors(i - 1));
  }
  return r;
}

QRational tau_raw(int n, int i) {
  require(n >= 0 && i >= 0, "tau_raw requires n, i >= 0");
  QRational r(brace_a_rise(i - 1, i), factorial_factors(i));
  if (i >= 1) {
    // (a q^{n-i} - a^{-1} q^{-n+i}) ({i}{n}/{1}) ({-i+1;a}_{i-1}/{i}_{i-1})
    LaurentPoly2 num = brace_a(n - i) * brace(i);
    num *= brace(n);
    num *= brace_a_rise(i - 1, i - 1);
    FactorProduct den;
    den.mul(QFactor::brace(1));
    den.mul(brace_fall_factors(i, i - 1));
    r += QRational(std::move(num), std::move(den));
  }
  if (i >= 2) {
    // - ({i}^2 {n}^2 / {1}^2) beta^1_{i-1,i-1:i,i}(a, -q^{-1})
    QRational b = beta(i - 1, i - 1, i, i, 1, BetaVariant::Antisym);
    LaurentPoly2 num = brace(i) * brace(i);
    num *= brace(n);
    num *= brace(n);
    QRational term(std::move(num), FactorProduct().mul(QFactor::brace(1), 2));
    r -= term * b;
  }
  return r;
}

LaurentPoly2 theta(int n, int i) {
  require(n >= 0 && i >= 0, "theta requires n, i >= 0");
  if (i > n) return {};  // a {0} factor occurs
  return brace_fall(n, i) * brace_a_fall(n + i - 2, i);
}

QRational bracket_h(int n) {
  require(n >= 0, "bracket_h requires n >= 0");
  return QRational(brace_a_fall(n - 1, n), factorial_factors(n));
}

QRational bracket_e(int n) {
  require(n >= 0, "bracket_e requires n >= 0");
  return QRational(brace_a_rise(n - 1, n), factorial_factors(n));
}

LaurentPoly2 twist_eigen_h(int n) {
  require(n >= 0, "twist_eigen_h requires n >= 0");
  return LaurentPoly2::monomial(BigInt(1), n, n * (n - 1));
}

LaurentPoly2 twist_eigen_e(int n) {
  require(n >= 0, "twist_eigen_e requires n >= 0");
  // n(n-1) is even, so (-q)^{-n(n-1)} carries no sign.
  const bool neg = (n * (n - 1)) % 2 != 0;
  return LaurentPoly2::monomial(BigInt(neg ? -1 : 1), n, -n * (n - 1));
}

LaurentPoly2 twist_eigen_d(int m, int n) {
  require(m >= 0 && n >= 0, "twist_eigen_d requires m, n >= 0");
  return LaurentPoly2::monomial(BigInt(1), m + n, m * (m - 1) + n * (n - 1));
}

QRational bracket_d(int m, int n) {
  require(m >= n && n >= 0, "bracket_d closed form requires m >= n >= 0");
  if (n == 0) return bracket_h(m);  // D_{m,0} = H_m
  LaurentPoly2 num = brace_a(m + n - 1) * brace_a_fall(m - 2, m - 1);
  num *= brace_a_fall(n - 2, n - 1);
  num *= brace_a(-1);
  FactorProduct den = factorial_factors(m);
  den.mul(factorial_factors(n));
  return QRational(std::move(num), std::move(den));
}

QRational bracket_d_sum(int m, int n) {
  require(m >= 0 && n >= 0, "bracket_d_sum requires m, n >= 0");
  QRational sum;
  for (int i = 0; i <= std::min(m, n); ++i) {
    QRational term = x_coeff(m, n, i);
    term.mul_poly(brace_a_fall(m - 1, m - i));
    term.mul_poly(brace_a_fall(n - 1, n - i));
    term.mul_poly(brace_a_fall(i - 1, i));
    term.div_factors(brace_fall_factors(m, m - i));
    term.div_factors(brace_fall_factors(n, n - i));
    term.div_factors(factorial_factors(i));
    sum += term;
  }
  return sum;
}

QRational t_coeff(int i) {
  require(i >= 0, "t_coeff requires i >= 0");
  return QRational(LaurentPoly2::monomial(BigInt(1), i, i * (i - 1) / 2),
                   factorial_factors(i));
}

QRational t_bar(int i) {
  require(i >= 0, "t_bar requires i >= 0");
  return QRational(
      LaurentPoly2::monomial(BigInt(i % 2 != 0 ? -1 : 1), -i, -i * (i - 1) / 2),
      factorial_factors(i));
}

namespace {

// {first;a}_{len} as denominator factors with the single {cancel;a} copy
// removed (the numerator's {cancel;a} factor cancels exactly).
FactorProduct brace_a_window_without(int first, int len, int cancel) {
  FactorProduct fp;
  bool removed = false;
  for (int t = 0; t < len; ++t) {
    const int idx = first - t;
    if (!removed && idx == cancel) {
      removed = true;
      continue;
    }
    fp.mul(QFactor::brace_a(idx));
  }
  if (!removed) throw std::logic_error("cancel index outside the window");
  return fp;
}

}  // namespace

QRational s_p(int i, int p) {
  require(i >= 0, "s_p requires i >= 0");
  QRational sum;
  for (int k = 0; k <= i; ++k) {
    const long long ea = 2LL * p * k;
    const long long eq = 2LL * p * k * (k - 1);
    LaurentPoly2 num =
        sign_monomial(k % 2 != 0, static_cast<int>(ea), static_cast<int>(eq));
    FactorProduct den = factorial_factors(k);
    den.mul(factorial_factors(i - k));
    den.mul(brace_a_window_without(i + k - 1, i + 1, 2 * k - 1));
    sum += QRational(std::move(num), std::move(den));
  }
  return sum;
}

QRational t_p(int i, int p) {
  QRational r = s_p(i, p);
  return i % 2 != 0 ? -r : r;
}

QRational twist_pairing_sym(int n, int p) {
  require(n >= 0, "twist_pairing_sym requires n >= 0");
  QRational sum;
  for (int i = 0; i <= n; ++i) {
    const long long ea = 2LL * p * i;
    const long long eq = 2LL * p * i * (i - 1);
    LaurentPoly2 num = brace_fall(n, n - i);
    num *= sign_monomial(i % 2 != 0, static_cast<int>(ea), static_cast<int>(eq));
    FactorProduct den = factorial_factors(n - i);
    den.mul(brace_a_window_without(n + i - 1, n + 1, 2 * i - 1));
    sum += QRational(std::move(num), std::move(den));
  }
  const long long pa = -2LL * p * n;
  const long long pq = -2LL * p * n * (n - 1);
  sum.mul_poly(brace_factorial(n));
  sum.mul_monomial(BigInt(1), static_cast<int>(pa), static_cast<int>(pq));
  return sum;
}

QRational twist_pairing_omega(int n, int p) {
  require(n >= 0, "twist_pairing_omega requires n >= 0");
  QRational r = t_p(n, p);
  LaurentPoly2 f = brace_factorial(n) * brace_factorial(n);
  r.mul_poly(f);
  const long long pa = -2LL * p * n;
  const long long pq = -2LL * p * n * (n - 1);
  r.mul_monomial(BigInt(n % 2 != 0 ? -1 : 1), static_cast<int>(pa),
                 static_cast<int>(pq));
  return r;
}

long long kappa_exp(int i, int j, int n) {
  const long long ii = i, jj = j, nn = n;
  return 2 * nn * (nn - 1) - nn * (ii + jj) - ii * (ii - 3) / 2 +
         jj * (jj + 1) / 2;
}

LaurentPoly2 lambda_entry(int i, int j, int n) {
  require(0 <= j && j <= i && i <= n, "lambda requires 0 <= j <= i <= n");
  LaurentPoly2 r = qbinomial_poly(i, j) * brace_a_fall(n + i - j - 2, i - j);
  r.mul_monomial(BigInt(1), 2 * n - i - j, static_cast<int>(kappa_exp(i, j, n)));
  return r;
}

}  // namespace twistknot::coeff
