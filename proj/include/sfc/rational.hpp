#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace sfc {

using Rational = mpq_class;
using Integer = mpz_class;

// Dyadic enclosure of sqrt(n) for nonnegative rational n:
// returns [lo, hi] with hi - lo <= 2^-bits * max(1, sqrt(n)).
struct RatPair {
    Rational lo, hi;
};

RatPair sqrt_enclosure(const Rational& n, unsigned bits);

// Largest integer r with r*r <= n (n >= 0).
Integer isqrt(const Integer& n);

std::string rat_str(const Rational& q);

// Round q toward -inf / +inf onto the grid of multiples of 2^-bits.
Rational floor_dyadic(const Rational& q, unsigned bits);
Rational ceil_dyadic(const Rational& q, unsigned bits);

inline double rat_to_double(const Rational& q) { return q.get_d(); }

}  // namespace sfc
