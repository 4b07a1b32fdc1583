#ifndef MULTISPEC_RATIONAL_HPP
#define MULTISPEC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace multispec {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den >= 1
// canonical at all times.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Serializes as "p" or "p/q" (lowest terms, q > 1 only when needed).
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "p" or "p/q" with arbitrary-precision integers.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace multispec

#endif
