#pragma once

#include <gmpxx.h>

#include <string>

namespace exactlab {

/// Exact rational scalar. All arithmetic in the library is exact; no floating
/// point is used anywhere, so there are no tolerances to configure.
using Rational = mpq_class;

/// Convenience constructor from an integer fraction (canonicalized).
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Renders "p" or "p/q" with canonical sign (denominator positive).
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& text);

}  // namespace exactlab
