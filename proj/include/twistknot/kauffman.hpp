#pragma once

// Independent brute-force oracle: the Kauffman bracket as a state sum over
// all 2^c crossing resolutions of a planar diagram, writhe-normalized to the
// Jones polynomial with V(unknot) = 1. Deliberately a different algorithm
// from everything else in the library, so agreement with the a = q^2
// specialization of the invariants is evidence rather than circularity.
//
// Diagrams are PD-code style: each crossing lists its four incident edge
// labels counterclockwise starting from the incoming under-strand edge,
// plus the crossing sign. Jones exponents may be half-integers for links,
// so they are stored doubled (the LaurentPoly1 exponent is 2 * exponent-of-t).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twistknot/laurent.hpp"

namespace twistknot::oracle {

struct Crossing {
  std::array<int, 4> edges;  // CCW from the incoming under-strand edge
  int sign;                  // +1 or -1
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  static PlanarDiagram unknot();
  static PlanarDiagram trefoil();       // the K_1 chirality
  static PlanarDiagram figure_eight();  // 4_1

  PlanarDiagram& add_crossing(int e0, int e1, int e2, int e3, int sign);
  PlanarDiagram& add_free_loop();  // crossingless unknot component

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  int writhe() const;

  /// Throws MalformedDiagram unless every edge label occurs exactly twice,
  /// signs are +-1, and the crossing count is <= 8 (the state sum is 2^c).
  void validate() const;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

/// The bracket polynomial in the bracket variable A, normalized so that the
/// unknot evaluates to 1 (each state contributes A^{#A - #B} d^{loops - 1}
/// with d = -A^2 - A^{-2}).
LaurentPoly1 kauffman_bracket(const PlanarDiagram& d);

/// (-A)^{-3w} times the bracket, rewritten in t = A^{-4}; exponents doubled.
LaurentPoly1 jones_polynomial(const PlanarDiagram& d);

/// Render a doubled-exponent Jones polynomial ("t^2 - t + 1 - t^-1 + t^-2";
/// odd doubled exponents print as t^(k/2)).
std::string jones_str(const LaurentPoly1& doubled);

struct ConventionReport {
  bool resolved = false;
  std::string convention;  // "t=q^2" or "t=q^-2"
  std::string detail;
};

/// Compare given (diagram, expected-specialization-in-q) pairs under both
/// candidate substitutions t = q^2 and t = q^-2; returns the unique match.
/// Throws NoConventionMatches when no single convention matches every pair
/// (an empty set counts as a failure).
ConventionReport resolve_jones_convention(
    const std::vector<std::pair<PlanarDiagram, LaurentPoly1>>& knots);

/// The built-in anchor: trefoil and figure-eight diagrams against the
/// a = q^2 specializations of the color-1 twist-knot invariants.
ConventionReport resolve_jones_convention();

}  // namespace twistknot::oracle
