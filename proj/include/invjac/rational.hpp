#pragma once

#include <gmpxx.h>
#include <string>

namespace invjac {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as everything goes through canonicalize().
using Rational = mpq_class;

// mpq_class(num, den) does NOT canonicalize, and GMP arithmetic silently
// assumes canonical operands. Use this instead of the two-argument ctor.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Renders as "p" or "p/q", never a float.
std::string rational_to_string(const Rational& value);

} // namespace invjac
