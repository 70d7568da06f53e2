#pragma once

// The q-symbol calculus: quantum integers, brace symbols and their falling /
// rising products, factorials, Gaussian binomials.
//
//   [n]   = {n}/{1}
//   {n}   = q^n - q^{-n}
//   {n;a} = a q^n - a^{-1} q^{-n}
//   brace_fall(n, i)   = {n}{n-1}...{n-i+1}
//   brace_a_fall(n, i) = {n;a}{n-1;a}...{n-i+1;a}
//   brace_a_rise(n, i) = {-n;a}{-n+1;a}...{-n+i-1;a}
//
// Length-0 products are 1; negative lengths throw NegativeLength (callers
// that need the "negative length means 0" summation convention handle it at
// the call site). All functions are pure; the product families memoize on
// their integer arguments behind a lock, so concurrent callers are fine.

#include "twistknot/laurent.hpp"

namespace twistknot::qsym {

LaurentPoly2 brace(int n);
LaurentPoly2 brace_a(int n);

const LaurentPoly2& brace_fall(int n, int i);
const LaurentPoly2& brace_a_fall(int n, int i);
const LaurentPoly2& brace_a_rise(int n, int i);

/// {n}! = {n}_n, n >= 0.
const LaurentPoly2& brace_factorial(int n);

/// [n] as {n}/{1}; reduces to a Laurent polynomial for every integer n.
QRational qint(int n);

/// [n]! = {n}!/{1}^n, n >= 0.
QRational qint_factorial(int n);

/// The Gaussian binomial as {n}!/({i}!{n-i}!); throws IndexRange outside
/// 0 <= i <= n. Reduces to a genuine Laurent polynomial, symmetric under
/// q <-> q^{-1}.
QRational qbinomial(int n, int i);

/// qbinomial reduced to its polynomial value (memoized).
const LaurentPoly2& qbinomial_poly(int n, int i);

// Factor-multiset builders for denominators.
FactorProduct factorial_factors(int n);               // {n}! as factors
FactorProduct brace_fall_factors(int n, int i);       // {n}_i as factors
FactorProduct brace_a_fall_factors(int n, int i);     // {n;a}_i as factors

}  // namespace twistknot::qsym
