#pragma once

// Colored HOMFLY-PT polynomials of twist knots K_p (p full twists in the
// clasp; K_1 is the left-handed trefoil, K_-1 the figure-eight, K_0 the
// unknot), normalized to 1 on the unknot at zero framing, plus the H <-> R
// basis change, the omega coefficient sequences, and the a = q^N
// specialization (N = 2 gives the colored Jones polynomial).

#include <vector>

#include "twistknot/laurent.hpp"

namespace twistknot::inv {

struct TwistKnotQuery {
  int p = 0;  // full twists
  int n = 0;  // color (strand count under the symmetrizer), >= 0
};

struct InvariantResult {
  TwistKnotQuery query;
  LaurentPoly2 polynomial;
  std::size_t term_count = 0;
  double millis = 0.0;
};

/// Triangular change of basis between H_0..H_n and R_0..R_n.
/// h_from_r[i][j] is the coefficient of R_j in H_i (diagonal 1);
/// r_from_h is its inverse, computed by triangular solve.
struct BasisChange {
  std::vector<std::vector<QRational>> h_from_r;
  std::vector<std::vector<QRational>> r_from_h;
};

BasisChange h_to_r(int n);

/// The coefficient sequence (t_{0,p}, ..., t_{n,p}) of omega_n^p.
std::vector<QRational> omega_coeffs(int n, int p);

/// The n-colored HOMFLY-PT polynomial of K_p via the closed double sum.
/// p = 0 short-circuits to 1. Throws NotDivisible only on an internal bug:
/// the assembled rational always reduces to a Laurent polynomial.
LaurentPoly2 colored_homfly_twist(int n, int p);

/// Same, but always evaluates the double sum (no p = 0 short-circuit);
/// used by the verification suite to check that the formula itself
/// collapses to 1 at p = 0.
LaurentPoly2 colored_homfly_twist_formula(int n, int p);

/// Single-sum forms for K_1 and K_-1.
LaurentPoly2 colored_homfly_trefoil(int n);
LaurentPoly2 colored_homfly_fig8(int n);

/// a = q^N specialization of colored_homfly_twist (N = 2: colored Jones).
LaurentPoly1 colored_jones(int n, int p, int N = 2);

InvariantResult compute_twist(const TwistKnotQuery& query);

}  // namespace twistknot::inv
