#pragma once

#include <gmpxx.h>

#include <string>

namespace chowlab {

// Exact rational scalar. GMP keeps values reduced with positive denominator;
// every constructor path below canonicalizes, so equality is plain mpq
// equality and serialization is stable.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts "p" and "p/q" (optional leading '-'); rejects everything else,
// including zero denominators. Throws StructuralError on bad input.
Rational parse_rational(const std::string& text);

} // namespace chowlab
