#pragma once

// Exact sparse Laurent-polynomial arithmetic in the two variables (a, q)
// over arbitrary-precision integers, plus the factored-denominator types
// (QFactor, FactorProduct, QRational) that the rest of the library builds
// on. Every quotient that occurs downstream has a denominator that is a
// multiset of the elementary binomials
//
//     {k}   = q^k - q^{-k}          (k != 0)
//     {k;a} = a q^k - a^{-1} q^{-k}
//
// so exact division is done factor-by-factor with binomial long division;
// there is no general multivariate GCD here and none is needed.
//
// Terms are kept canonical: no zero coefficients, ordered descending
// lexicographically on (e_a, e_q). String and JSON output follow that
// order, so output is byte-stable across runs.
//
// All values are immutable in practice (operations return new values) and
// safe to share across threads.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistknot/bigint.hpp"
#include "twistknot/errors.hpp"

namespace twistknot {

struct Exp2 {
  int a = 0;
  int q = 0;
  friend bool operator==(const Exp2& l, const Exp2& r) {
    return l.a == r.a && l.q == r.q;
  }
};

/// Canonical term order: descending lexicographic on (e_a, e_q).
struct Exp2Descending {
  bool operator()(const Exp2& l, const Exp2& r) const {
    if (l.a != r.a) return l.a > r.a;
    return l.q > r.q;
  }
};

class LaurentPoly1;

class LaurentPoly2 {
 public:
  using TermMap = std::map<Exp2, BigInt, Exp2Descending>;

  LaurentPoly2() = default;

  static LaurentPoly2 monomial(const BigInt& c, int ea, int eq);
  static LaurentPoly2 constant(long c) { return monomial(BigInt(c), 0, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of a^ea q^eq (zero if absent).
  BigInt coeff(int ea, int eq) const;

  void add_term(const BigInt& c, int ea, int eq);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  LaurentPoly2 operator-() const;

  friend LaurentPoly2 operator+(LaurentPoly2 x, const LaurentPoly2& y) {
    x += y;
    return x;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 x, const LaurentPoly2& y) {
    x -= y;
    return x;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& x, const LaurentPoly2& y);
  friend bool operator==(const LaurentPoly2& x, const LaurentPoly2& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const LaurentPoly2& x, const LaurentPoly2& y) {
    return !(x == y);
  }

  /// Multiply in place by c * a^ea * q^eq.
  LaurentPoly2& mul_monomial(const BigInt& c, int ea, int eq);

  /// a -> a^{-1}, q -> q^{-1} (an involutive ring homomorphism).
  LaurentPoly2 mirrored() const;

  /// q -> -q^{-1} (a ring homomorphism; a untouched).
  LaurentPoly2 subst_neg_q_inv() const;

  /// a -> q^N; collapses to a one-variable Laurent polynomial in q.
  LaurentPoly1 substitute_a(int N) const;

  /// Canonical text form, e.g. "a^2 - q^2 + 1 - q^-2 + a^-2".
  std::string str() const;
  static LaurentPoly2 parse(const std::string& text);

 private:
  TermMap terms_;
};

/// One-variable Laurent polynomial (used for q-specializations and for the
/// Kauffman oracle's bracket/Jones values).
class LaurentPoly1 {
 public:
  using TermMap = std::map<int, BigInt, std::greater<int>>;

  LaurentPoly1() = default;
  static LaurentPoly1 monomial(const BigInt& c, int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const TermMap& terms() const { return terms_; }

  void add_term(const BigInt& c, int e);
  LaurentPoly1& operator+=(const LaurentPoly1& o);
  friend LaurentPoly1 operator*(const LaurentPoly1& x, const LaurentPoly1& y);
  friend bool operator==(const LaurentPoly1& x, const LaurentPoly1& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const LaurentPoly1& x, const LaurentPoly1& y) {
    return !(x == y);
  }

  /// variable -> variable^{-1}.
  LaurentPoly1 mirrored() const;

  std::string str(const std::string& var = "q") const;

 private:
  TermMap terms_;
};

/// A symbolic elementary factor. Brace(0) expands to the zero polynomial
/// and is rejected wherever a denominator is being built.
class QFactor {
 public:
  enum class Kind { Brace, BraceA, Int, Monomial };

  static QFactor brace(int k);
  static QFactor brace_a(int k);
  static QFactor integer(const BigInt& c);
  static QFactor monomial(int ea, int eq);

  Kind kind() const { return kind_; }
  int index() const { return k_; }
  const BigInt& value() const { return c_; }
  int exp_a() const { return ea_; }
  int exp_q() const { return eq_; }

  LaurentPoly2 expand() const;
  std::string str() const;

 private:
  QFactor() = default;
  Kind kind_ = Kind::Int;
  int k_ = 0;
  BigInt c_{1};
  int ea_ = 0;
  int eq_ = 0;
};

/// Returns g with g * expand(f) == num, or throws NotDivisible.
/// Division by {k}: shift by q^k and long-divide by (q^{2k} - 1) layer by
/// layer in q. Division by {k;a}: shift by a q^k and long-divide by
/// (a^2 q^{2k} - 1) layer by layer in a. Both divisors are monic in the
/// layering variable, so the quotient stays over the integers.
LaurentPoly2 divide_exact(const LaurentPoly2& num, const QFactor& f);

/// A multiset of elementary factors, kept unexpanded so that cancellation
/// against numerators happens factor by factor.  The empty product is 1.
class FactorProduct {
 public:
  FactorProduct() = default;

  bool is_one() const;

  /// Multiply in a factor (Brace(0) and Int(0) throw ZeroFactor).
  /// Brace(-k) is normalized to -1 * Brace(k).
  FactorProduct& mul(const QFactor& f, int multiplicity = 1);
  FactorProduct& mul(const FactorProduct& o);

  /// Cancel one copy of {k;a}; returns false if absent.
  bool remove_brace_a(int k);

  LaurentPoly2 expand() const;

  /// Multiset maximum (assumes both sides carry no monomial part and
  /// positive content, which normalization guarantees).
  static FactorProduct lcm(const FactorProduct& x, const FactorProduct& y);

  /// super / *this as a factor multiset; throws if *this is not contained.
  FactorProduct cofactor_in(const FactorProduct& super) const;

  const BigInt& content() const { return content_; }
  int mono_a() const { return mono_a_; }
  int mono_q() const { return mono_q_; }
  /// Binomial part keyed by (is_brace_a, k) -> multiplicity.
  const std::map<std::pair<bool, int>, int>& binomials() const {
    return binomials_;
  }

  friend bool operator==(const FactorProduct& x, const FactorProduct& y);

  std::string str() const;

 private:
  friend class QRational;
  std::map<std::pair<bool, int>, int> binomials_;
  BigInt content_{1};
  int mono_a_ = 0;
  int mono_q_ = 0;
};

/// A Laurent polynomial numerator over a factored denominator. The value
/// class for every eigenvalue / coefficient family. Kept normalized: unit
/// parts of the denominator (sign, monomial) are hoisted into the numerator
/// and zero is canonical (0 / 1).
class QRational {
 public:
  QRational() = default;  // zero
  explicit QRational(LaurentPoly2 num);
  QRational(LaurentPoly2 num, FactorProduct den);

  static QRational from_int(long c);
  static const QRational& one();

  const LaurentPoly2& num() const { return num_; }
  const FactorProduct& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational operator-() const;
  friend QRational operator+(QRational x, const QRational& y) {
    x += y;
    return x;
  }
  friend QRational operator-(QRational x, const QRational& y) {
    x -= y;
    return x;
  }
  friend QRational operator*(QRational x, const QRational& y) {
    x *= y;
    return x;
  }

  QRational& mul_poly(const LaurentPoly2& p);
  QRational& mul_monomial(const BigInt& c, int ea, int eq);
  /// Divide by a factor (multiplies it into the denominator).
  QRational& div_factor(const QFactor& f, int multiplicity = 1);
  QRational& div_factors(const FactorProduct& fp);

  QRational mirrored() const;
  QRational subst_neg_q_inv() const;

  /// Fully reduce to a Laurent polynomial; throws NotDivisible when the
  /// value is genuinely non-polynomial.
  LaurentPoly2 reduced() const;

  std::string str() const;

  /// Equality by cross-multiplication (no reduction required).
  friend bool rat_eq(const QRational& x, const QRational& y);

 private:
  void normalize();
  LaurentPoly2 num_;
  FactorProduct den_;
};

}  // namespace twistknot
