#pragma once

#include <gmpxx.h>

#include <string>

namespace twistknot {

/// Exact arbitrary-precision integer. Invariant coefficients overflow 64-bit
/// words already at moderate color/twist parameters.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace twistknot
