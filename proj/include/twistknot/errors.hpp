#pragma once

#include <stdexcept>
#include <string>

namespace twistknot {

/// Exact division failed: the dividend is not a multiple of the factor.
/// For invariant assembly this always signals an upstream identity bug,
/// never a legal outcome; for intermediate eigenvalue quantities it is a
/// legitimate "genuinely non-polynomial" answer.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero factor ({0} or the integer 0) was used as a denominator.
class ZeroFactor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol product was requested with negative length.
class NegativeLength : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index tuple is outside the domain of a coefficient family.
class IndexRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnknownSuite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConventionMatches : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistknot
