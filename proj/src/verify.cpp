#include "twistknot/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "twistknot/coefficients.hpp"
#include "twistknot/invariants.hpp"
#include "twistknot/kauffman.hpp"
#include "twistknot/qsymbols.hpp"

namespace twistknot::verify {

namespace {

using qsym::brace;
using qsym::brace_a;
using qsym::brace_a_fall;
using qsym::brace_fall;
using qsym::qbinomial;
using qsym::qbinomial_poly;

class SuiteRun {
 public:
  SuiteRun(std::string name, std::string range) {
    report_.suite = std::move(name);
    report_.range = std::move(range);
    report_.passed = true;
  }

  void check(bool ok, const std::string& params, const std::string& lhs,
             const std::string& rhs) {
    ++report_.checked;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = params + " | " + lhs + " | " + rhs;
    }
  }

  void check_poly(const LaurentPoly2& l, const LaurentPoly2& r,
                  const std::string& params) {
    check(l == r, params, l.str(), r.str());
  }

  void check_rat(const QRational& l, const QRational& r,
                 const std::string& params) {
    check(rat_eq(l, r), params, l.str(), r.str());
  }

  IdentityReport finish() { return std::move(report_); }

 private:
  IdentityReport report_;
};

int bound(int override_value, int fallback) {
  return override_value > 0 ? override_value : fallback;
}

std::string tag(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

// --- qsymbols ---------------------------------------------------------------

IdentityReport suite_qbinomial_symmetry(const SuiteRanges& r) {
  const int N = bound(r.max_n, 12);
  SuiteRun run("qbinomial-symmetry", "0<=i<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      run.check_poly(qbinomial_poly(n, i), qbinomial_poly(n, n - i),
                     tag({{"n", n}, {"i", i}}));
  return run.finish();
}

IdentityReport suite_qbinomial_pascal(const SuiteRanges& r) {
  const int N = bound(r.max_n, 12);
  SuiteRun run("qbinomial-pascal", "1<=n<=" + std::to_string(N));
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      // [n i] = q^i [n-1 i] + q^{-(n-i)} [n-1 i-1]
      LaurentPoly2 rhs;
      if (i <= n - 1) {
        LaurentPoly2 t = qbinomial_poly(n - 1, i);
        t.mul_monomial(BigInt(1), 0, i);
        rhs += t;
      }
      if (i >= 1) {
        LaurentPoly2 t = qbinomial_poly(n - 1, i - 1);
        t.mul_monomial(BigInt(1), 0, -(n - i));
        rhs += t;
      }
      run.check_poly(qbinomial_poly(n, i), rhs, tag({{"n", n}, {"i", i}}));
    }
  return run.finish();
}

IdentityReport suite_brace_fall_vanishing(const SuiteRanges& r) {
  const int N = bound(r.max_n, 12);
  SuiteRun run("brace-fall-vanishing", "0<=n<i<=" + std::to_string(N));
  for (int i = 1; i <= N; ++i)
    for (int n = 0; n < i; ++n)
      run.check(brace_fall(n, i).is_zero(), tag({{"n", n}, {"i", i}}),
                brace_fall(n, i).str(), "0");
  return run.finish();
}

IdentityReport suite_brace_product_transform(const SuiteRanges& r) {
  const int M = bound(r.max_m, 6);
  SuiteRun run("brace-product-transform",
               "|m|,|n|,|i|<=" + std::to_string(M));
  for (int m = -M; m <= M; ++m)
    for (int n = -M; n <= M; ++n)
      for (int i = -M; i <= M; ++i) {
        // {m-1;a}{n-1;a} = {m+n-i-1;a}{i-1;a} + {m-i}{n-i}
        LaurentPoly2 lhs = brace_a(m - 1) * brace_a(n - 1);
        LaurentPoly2 rhs = brace_a(m + n - i - 1) * brace_a(i - 1);
        rhs += brace(m - i) * brace(n - i);
        run.check_poly(lhs, rhs, tag({{"m", m}, {"n", n}, {"i", i}}));
      }
  return run.finish();
}

IdentityReport suite_eta_brace_expansion(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("eta-brace-expansion", "|n|<=" + std::to_string(N));
  for (int n = -N; n <= N; ++n) {
    // {n}{n-1;a}{1} = {2n;a} - {2(n-1);a} + {-2;a} - {0;a}
    LaurentPoly2 lhs = brace(n) * brace_a(n - 1);
    lhs *= brace(1);
    LaurentPoly2 rhs = brace_a(2 * n) - brace_a(2 * (n - 1));
    rhs += brace_a(-2) - brace_a(0);
    run.check_poly(lhs, rhs, tag({{"n", n}}));
  }
  return run.finish();
}

// --- coefficients -----------------------------------------------------------

IdentityReport suite_eta_decomposition(const SuiteRanges& r) {
  const int N = bound(r.max_n, 10);
  SuiteRun run("eta-decomposition", "0<=i<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      LaurentPoly2 rhs = coeff::eta(n, i) + coeff::eta(i, 0);
      run.check_poly(coeff::eta(n, 0), rhs, tag({{"n", n}, {"i", i}}));
    }
  return run.finish();
}

IdentityReport suite_theta_recursion(const SuiteRanges& r) {
  const int N = bound(r.max_n, 10);
  SuiteRun run("theta-recursion", "1<=k<=n<=" + std::to_string(N));
  for (int n = 1; n <= N; ++n)
    for (int k = 1; k <= n; ++k) {
      LaurentPoly2 rhs = coeff::theta(n, k - 1) * coeff::eta(n, k - 1);
      run.check_poly(coeff::theta(n, k), rhs, tag({{"n", n}, {"k", k}}));
    }
  return run.finish();
}

IdentityReport suite_sigma_expansion(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("sigma-expansion", "0<=n,i<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= N; ++i) {
      QRational rhs;
      for (int j = 0; j <= i; ++j) {
        QRational term(brace_a_fall(i - 1 + j, i - j),
                       qsym::factorial_factors(i - j));
        term.mul_poly(coeff::theta(n, j));
        rhs += term;
      }
      run.check_rat(coeff::sigma(n, i), rhs, tag({{"n", n}, {"i", i}}));
    }
  return run.finish();
}

IdentityReport suite_sigma_determinant(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("sigma-determinant", "0<=n<=" + std::to_string(N) +
                                        " 1<=i<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n)
    for (int i = 1; i <= N; ++i) {
      // sigma_{n,i} = sum_{j=1}^i (-1)^{j-1} sigma_{n,i-j} tau_{n,j}
      QRational rhs;
      for (int j = 1; j <= i; ++j) {
        QRational term = coeff::sigma(n, i - j) * coeff::tau(n, j);
        if (j % 2 == 0) term = -term;
        rhs += term;
      }
      run.check_rat(coeff::sigma(n, i), rhs, tag({{"n", n}, {"i", i}}));
    }
  return run.finish();
}

IdentityReport suite_tau_raw_reduction(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("tau-raw-reduction",
               "0<=n<=" + std::to_string(N) + " 1<=i<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n)
    for (int i = 1; i <= N; ++i)
      run.check_rat(coeff::tau_raw(n, i), coeff::tau(n, i),
                    tag({{"n", n}, {"i", i}}));
  return run.finish();
}

IdentityReport suite_beta_symmetry(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("beta-symmetry", "0<=j,k, j+k<=i<=" + std::to_string(N));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; j + k <= i; ++k) {
        const QRational lhs = coeff::beta_formula(i - k, i - j, i, i, j);
        const QRational rhs = coeff::beta_formula(i - j, i - k, i, i, k);
        run.check_rat(lhs, rhs, tag({{"i", i}, {"j", j}, {"k", k}}));
      }
  return run.finish();
}

IdentityReport suite_alpha_mirror(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("alpha-mirror", "0<=i<=min(m,n), m,n<=" + std::to_string(N));
  for (int m = 0; m <= N; ++m)
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= std::min(m, n); ++i)
        run.check_rat(coeff::alpha_bar(m, n, i),
                      coeff::alpha(m, n, i).mirrored(),
                      tag({{"m", m}, {"n", n}, {"i", i}}));
  return run.finish();
}

LaurentPoly2 twist_eigenvalue_summand(int n, int i) {
  LaurentPoly2 t = qbinomial_poly(n, i) * brace_a_fall(n + i - 2, i);
  t.mul_monomial(BigInt(1), i, i * (i - 1) / 2);
  return t;
}

IdentityReport suite_twist_eigenvalue_identity(const SuiteRanges& r) {
  const int N = bound(r.max_n, 12);
  SuiteRun run("twist-eigenvalue-identity", "0<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    LaurentPoly2 rhs;
    for (int i = 0; i <= n; ++i) rhs += twist_eigenvalue_summand(n, i);
    const LaurentPoly2 lhs =
        LaurentPoly2::monomial(BigInt(1), 2 * n, 2 * n * (n - 1));
    run.check_poly(lhs, rhs, tag({{"n", n}}));
  }
  return run.finish();
}

IdentityReport suite_lambda_triangle(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("lambda-triangle", "0<=j<=i<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    const LaurentPoly2 total =
        LaurentPoly2::monomial(BigInt(1), 2 * n, 2 * n * (n - 1));
    for (int i = 0; i <= n; ++i) {
      LaurentPoly2 row_sum;
      for (int j = 0; j <= i; ++j) row_sum += coeff::lambda_entry(i, j, n);
      run.check_poly(row_sum, total, tag({{"n", n}, {"i", i}, {"row", 1}}));
    }
    // split recursion: entry (i+1,j) = first part of (i,j) + second part of (i,j-1)
    for (int i = 0; i + 1 <= n; ++i)
      for (int j = 0; j <= i + 1; ++j) {
        LaurentPoly2 rhs;
        if (j <= i) {
          LaurentPoly2 t = coeff::lambda_entry(i, j, n) * brace_a(n + i - j - 1);
          t.mul_monomial(BigInt(1), -1, -(n + i - j - 1));
          rhs += t;
        }
        if (j >= 1) {
          LaurentPoly2 t = coeff::lambda_entry(i, j - 1, n);
          t.mul_monomial(BigInt(1), -2, -2 * (n + i - j));
          rhs += t;
        }
        run.check_poly(coeff::lambda_entry(i + 1, j, n), rhs,
                       tag({{"n", n}, {"i", i + 1}, {"j", j}}));
      }
    // bottom-row entries match the eigenvalue proposition summands (k <-> n-i)
    for (int k = 0; k <= n; ++k)
      run.check_poly(coeff::lambda_entry(n, k, n),
                     twist_eigenvalue_summand(n, n - k),
                     tag({{"n", n}, {"k", k}, {"match", 1}}));
  }
  return run.finish();
}

IdentityReport suite_two_way_twist(const SuiteRanges& r) {
  const int N = bound(r.max_n, 5);
  const int P = bound(r.max_p, 3);
  SuiteRun run("two-way-twist",
               "0<=n<=" + std::to_string(N) + " |p|<=" + std::to_string(P));
  for (int n = 0; n <= N; ++n)
    for (int p = -P; p <= P; ++p)
      run.check_rat(coeff::twist_pairing_sym(n, p),
                    coeff::twist_pairing_omega(n, p),
                    tag({{"n", n}, {"p", p}}));
  return run.finish();
}

IdentityReport suite_omega_p_collapse(const SuiteRanges& r) {
  const int N = bound(r.max_n, 10);
  SuiteRun run("omega-p-collapse", "0<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    run.check_rat(coeff::t_p(n, 1), coeff::t_coeff(n), tag({{"n", n}, {"p", 1}}));
    run.check_rat(coeff::t_p(n, -1), coeff::t_bar(n), tag({{"n", n}, {"p", -1}}));
  }
  return run.finish();
}

IdentityReport suite_bracket_d_two_route(const SuiteRanges& r) {
  const int M = bound(r.max_m, 6);
  SuiteRun run("bracket-d-two-route", "1<=n<=m<=" + std::to_string(M));
  for (int m = 1; m <= M; ++m)
    for (int n = 1; n <= m; ++n)
      run.check_rat(coeff::bracket_d(m, n), coeff::bracket_d_sum(m, n),
                    tag({{"m", m}, {"n", n}}));
  return run.finish();
}

IdentityReport suite_sigma_tau_boundary(const SuiteRanges& r) {
  const int N = bound(r.max_n, 10);
  SuiteRun run("sigma-tau-boundary", "0<=i<=" + std::to_string(N));
  for (int i = 0; i <= N; ++i) {
    run.check_rat(coeff::sigma(0, i), coeff::bracket_h(i),
                  tag({{"i", i}, {"H", 1}}));
    run.check_rat(coeff::tau(0, i), coeff::bracket_e(i),
                  tag({{"i", i}, {"E", 1}}));
  }
  return run.finish();
}

IdentityReport suite_theta_vanishing(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("theta-vanishing",
               "0<=n<=" + std::to_string(N) + " 0<=i<=2n");
  for (int n = 0; n <= N; ++n)
    for (int i = 0; i <= 2 * n; ++i) {
      const bool zero = coeff::theta(n, i).is_zero();
      run.check(zero == (i > n), tag({{"n", n}, {"i", i}}),
                coeff::theta(n, i).str(), i > n ? "0" : "nonzero");
    }
  return run.finish();
}

// --- invariants -------------------------------------------------------------

IdentityReport suite_twist_vs_single_sum(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("twist-vs-single-sum", "0<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    run.check_poly(inv::colored_homfly_twist_formula(n, 1),
                   inv::colored_homfly_trefoil(n), tag({{"n", n}, {"p", 1}}));
    run.check_poly(inv::colored_homfly_twist_formula(n, -1),
                   inv::colored_homfly_fig8(n), tag({{"n", n}, {"p", -1}}));
  }
  return run.finish();
}

IdentityReport suite_fig8_amphichiral(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("figure-eight-amphichiral", "0<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    const LaurentPoly2 v = inv::colored_homfly_twist(n, -1);
    run.check_poly(v.mirrored(), v, tag({{"n", n}}));
  }
  return run.finish();
}

IdentityReport suite_twist_polynomiality(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  const int P = bound(r.max_p, 3);
  SuiteRun run("twist-polynomiality",
               "0<=n<=" + std::to_string(N) + " |p|<=" + std::to_string(P));
  for (int n = 0; n <= N; ++n)
    for (int p = -P; p <= P; ++p) {
      bool ok = true;
      std::string what = "Laurent polynomial";
      try {
        (void)inv::colored_homfly_twist_formula(n, p);
      } catch (const NotDivisible& e) {
        ok = false;
        what = e.what();
      }
      run.check(ok, tag({{"n", n}, {"p", p}}), what, "Laurent polynomial");
    }
  return run.finish();
}

IdentityReport suite_basis_change_inverse(const SuiteRanges& r) {
  const int N = bound(r.max_n, 10);
  SuiteRun run("basis-change-inverse", "n<=" + std::to_string(N));
  const inv::BasisChange bc = inv::h_to_r(N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= i; ++j) {
      QRational prod;
      for (int k = j; k <= i; ++k)
        prod += bc.h_from_r[i][k] * bc.r_from_h[k][j];
      run.check_rat(prod, i == j ? QRational::one() : QRational(),
                    tag({{"i", i}, {"j", j}}));
    }
  return run.finish();
}

IdentityReport suite_unknot_normalization(const SuiteRanges& r) {
  const int N = bound(r.max_n, 8);
  SuiteRun run("unknot-normalization", "0<=n<=" + std::to_string(N));
  const LaurentPoly2 one = LaurentPoly2::constant(1);
  for (int n = 0; n <= N; ++n) {
    run.check_poly(inv::colored_homfly_twist(n, 0), one, tag({{"n", n}}));
    run.check_poly(inv::colored_homfly_twist_formula(n, 0), one,
                   tag({{"n", n}, {"formula", 1}}));
  }
  return run.finish();
}

// --- oracle -----------------------------------------------------------------

IdentityReport suite_jones_cyclotomic_fig8(const SuiteRanges& r) {
  const int N = bound(r.max_n, 6);
  SuiteRun run("jones-cyclotomic-fig8", "0<=n<=" + std::to_string(N));
  for (int n = 0; n <= N; ++n) {
    // classical cyclotomic expansion of the figure-eight colored Jones:
    // sum_{k=0}^{n} prod_{j=1}^{k} (q^{n+1-j} - q^{-(n+1-j)})(q^{n+1+j} - q^{-(n+1+j)})
    LaurentPoly1 total = LaurentPoly1::monomial(BigInt(1), 0);
    LaurentPoly1 prod = LaurentPoly1::monomial(BigInt(1), 0);
    for (int k = 1; k <= n; ++k) {
      LaurentPoly1 lo, hi;
      lo.add_term(BigInt(1), n + 1 - k);
      lo.add_term(BigInt(-1), -(n + 1 - k));
      hi.add_term(BigInt(1), n + 1 + k);
      hi.add_term(BigInt(-1), -(n + 1 + k));
      prod = prod * lo;
      prod = prod * hi;
      total += prod;
    }
    const LaurentPoly1 ours = inv::colored_jones(n, -1, 2);
    run.check(ours == total, tag({{"n", n}}), ours.str("q"), total.str("q"));
  }
  return run.finish();
}

IdentityReport suite_jones_convention(const SuiteRanges&) {
  SuiteRun run("jones-convention", "n=1, knots {3_1, 4_1}");
  try {
    const auto rep = oracle::resolve_jones_convention();
    run.check(rep.resolved && rep.convention == "t=q^2", "both knots",
              rep.convention, "t=q^2");
  } catch (const NoConventionMatches& e) {
    run.check(false, "both knots", e.what(), "unique convention");
  }
  return run.finish();
}

struct SuiteDef {
  const char* name;
  IdentityReport (*run)(const SuiteRanges&);
};

constexpr SuiteDef kSuites[] = {
    {"qbinomial-symmetry", suite_qbinomial_symmetry},
    {"qbinomial-pascal", suite_qbinomial_pascal},
    {"brace-fall-vanishing", suite_brace_fall_vanishing},
    {"brace-product-transform", suite_brace_product_transform},
    {"eta-brace-expansion", suite_eta_brace_expansion},
    {"eta-decomposition", suite_eta_decomposition},
    {"theta-recursion", suite_theta_recursion},
    {"sigma-expansion", suite_sigma_expansion},
    {"sigma-determinant", suite_sigma_determinant},
    {"tau-raw-reduction", suite_tau_raw_reduction},
    {"beta-symmetry", suite_beta_symmetry},
    {"alpha-mirror", suite_alpha_mirror},
    {"twist-eigenvalue-identity", suite_twist_eigenvalue_identity},
    {"lambda-triangle", suite_lambda_triangle},
    {"two-way-twist", suite_two_way_twist},
    {"omega-p-collapse", suite_omega_p_collapse},
    {"bracket-d-two-route", suite_bracket_d_two_route},
    {"sigma-tau-boundary", suite_sigma_tau_boundary},
    {"theta-vanishing", suite_theta_vanishing},
    {"twist-vs-single-sum", suite_twist_vs_single_sum},
    {"figure-eight-amphichiral", suite_fig8_amphichiral},
    {"twist-polynomiality", suite_twist_polynomiality},
    {"basis-change-inverse", suite_basis_change_inverse},
    {"unknot-normalization", suite_unknot_normalization},
    {"jones-cyclotomic-fig8", suite_jones_cyclotomic_fig8},
    {"jones-convention", suite_jones_convention},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  return names;
}

IdentityReport run_suite(const std::string& name, const SuiteRanges& r) {
  for (const auto& s : kSuites) {
    if (name == s.name) {
      const auto start = std::chrono::steady_clock::now();
      IdentityReport rep = s.run(r);
      rep.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
      return rep;
    }
  }
  throw UnknownSuite("unknown verification suite: " + name);
}

std::vector<IdentityReport> run_all(const SuiteRanges& r) {
  std::vector<IdentityReport> out;
  for (const auto& s : kSuites) out.push_back(run_suite(s.name, r));
  return out;
}

}  // namespace twistknot::verify
