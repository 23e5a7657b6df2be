#pragma once

// Exact rational scalars. Backed by GMP so numerators and denominators are
// arbitrary precision; everything downstream (forms, polytopes, simplex)
// works over these — no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgx {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on
// malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

// Formats as "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_to_string(const Rational& q);

}  // namespace sgx
