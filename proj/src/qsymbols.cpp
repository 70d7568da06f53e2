#include "twistknot/qsymbols.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace twistknot::qsym {

namespace {

// Insert-only memo table; std::map nodes are stable, so handing out
// references is safe once the lock is released.
template <typename K>
class PolyMemo {
 public:
  template <typename F>
  const LaurentPoly2& get(const K& key, F&& compute) {
    std::scoped_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, compute()).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<K, LaurentPoly2> cache_;
};

void check_length(int i) {
  if (i < 0) throw NegativeLength("product length must be >= 0");
}

}  // namespace

LaurentPoly2 brace(int n) {
  if (n == 0) return {};
  LaurentPoly2 p;
  p.add_term(BigInt(1), 0, n);
  p.add_term(BigInt(-1), 0, -n);
  return p;
}

LaurentPoly2 brace_a(int n) {
  LaurentPoly2 p;
  p.add_term(BigInt(1), 1, n);
  p.add_term(BigInt(-1), -1, -n);
  return p;
}

const LaurentPoly2& brace_fall(int n, int i) {
  check_length(i);
  static PolyMemo<std::pair<int, int>> memo;
  return memo.get({n, i}, [&] {
    LaurentPoly2 p = LaurentPoly2::constant(1);
    for (int t = 0; t < i; ++t) {
      p *= brace(n - t);
      if (p.is_zero()) break;
    }
    return p;
  });
}

const LaurentPoly2& brace_a_fall(int n, int i) {
  check_length(i);
  static PolyMemo<std::pair<int, int>> memo;
  return memo.get({n, i}, [&] {
    LaurentPoly2 p = LaurentPoly2::constant(1);
    for (int t = 0; t < i; ++t) p *= brace_a(n - t);
    return p;
  });
}

const LaurentPoly2& brace_a_rise(int n, int i) {
  check_length(i);
  static PolyMemo<std::pair<int, int>> memo;
  return memo.get({n, i}, [&] {
    LaurentPoly2 p = LaurentPoly2::constant(1);
    for (int t = 0; t < i; ++t) p *= brace_a(-n + t);
    return p;
  });
}

const LaurentPoly2& brace_factorial(int n) {
  if (n < 0) throw NegativeLength("factorial of a negative integer");
  return brace_fall(n, n);
}

QRational qint(int n) {
  FactorProduct den;
  den.mul(QFactor::brace(1));
  return QRational(brace(n), std::move(den));
}

QRational qint_factorial(int n) {
  if (n < 0) throw NegativeLength("factorial of a negative integer");
  FactorProduct den;
  den.mul(QFactor::brace(1), n);
  return QRational(brace_factorial(n), std::move(den));
}

QRational qbinomial(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw IndexRange("qbinomial requires 0 <= i <= n");
  FactorProduct den = factorial_factors(i);
  den.mul(factorial_factors(n - i));
  return QRational(brace_factorial(n), std::move(den));
}

const LaurentPoly2& qbinomial_poly(int n, int i) {
  static PolyMemo<std::pair<int, int>> memo;
  if (n < 0 || i < 0 || i > n)
    throw IndexRange("qbinomial requires 0 <= i <= n");
  return memo.get({n, i}, [&] { return qbinomial(n, i).reduced(); });
}

FactorProduct factorial_factors(int n) {
  if (n < 0) throw NegativeLength("factorial of a negative integer");
  FactorProduct fp;
  for (int k = 1; k <= n; ++k) fp.mul(QFactor::brace(k));
  return fp;
}

FactorProduct brace_fall_factors(int n, int i) {
  check_length(i);
  FactorProduct fp;
  for (int t = 0; t < i; ++t) fp.mul(QFactor::brace(n - t));
  return fp;
}

FactorProduct brace_a_fall_factors(int n, int i) {
  check_length(i);
  FactorProduct fp;
  for (int t = 0; t < i; ++t) fp.mul(QFactor::brace_a(n - t));
  return fp;
}

}  // namespace twistknot::qsym
