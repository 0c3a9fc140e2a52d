#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "sfc/rational.hpp"

namespace sfc {

struct RationalInterval;

// Element of the field Q adjoined sqrt(2) and sqrt(3):
//   value = a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6).
// The representation is canonical (1, r2, r3, r6 are linearly independent
// over Q), so value equality is coordinate equality.
struct ExactScalar {
    Rational a, b, c, d;

    ExactScalar() : a(0), b(0), c(0), d(0) {}
    ExactScalar(long v) : a(v), b(0), c(0), d(0) {}
    ExactScalar(const Rational& v) : a(v), b(0), c(0), d(0) {}
    ExactScalar(Rational av, Rational bv, Rational cv, Rational dv)
        : a(std::move(av)), b(std::move(bv)), c(std::move(cv)), d(std::move(dv)) {}

    static ExactScalar sqrt2() { return ExactScalar(0, 1, 0, 0); }
    static ExactScalar sqrt3() { return ExactScalar(0, 0, 1, 0); }
    static ExactScalar sqrt6() { return ExactScalar(0, 0, 0, 1); }
    static ExactScalar from_ratio(long num, long den) {
        return ExactScalar(Rational(num, den));
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    bool operator==(const ExactScalar& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    ExactScalar operator-() const { return ExactScalar(-a, -b, -c, -d); }
    ExactScalar operator+(const ExactScalar& o) const {
        return ExactScalar(a + o.a, b + o.b, c + o.c, d + o.d);
    }
    ExactScalar operator-(const ExactScalar& o) const {
        return ExactScalar(a - o.a, b - o.b, c - o.c, d - o.d);
    }
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;

    ExactScalar& operator+=(const ExactScalar& o) { *this = *this + o; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { *this = *this - o; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { *this = *this * o; return *this; }

    // Sign of the real value: 0 decided by the coordinate check, otherwise
    // by refining rational enclosures of sqrt(2) and sqrt(3) until the
    // enclosing interval excludes zero.
    int sign() const;

    int cmp(const ExactScalar& o) const { return (*this - o).sign(); }
    bool operator<(const ExactScalar& o) const { return cmp(o) < 0; }
    bool operator<=(const ExactScalar& o) const { return cmp(o) <= 0; }
    bool operator>(const ExactScalar& o) const { return cmp(o) > 0; }
    bool operator>=(const ExactScalar& o) const { return cmp(o) >= 0; }

    ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const;

    // Interval of width <= 2^-bits * max(1, |value|) containing the value.
    RationalInterval enclose(unsigned bits) const;

    // Canonical textual form in the scalar grammar, e.g. "4/9 + 2/9*r3".
    std::string str() const;
    // Compact canonical key for hashing/equality maps.
    std::string key() const;
};

// Parses the scalar grammar:
//   expr := term (('+'|'-') term)*
//   term := rational ('*' radical)? | radical
//   radical := 'r2' | 'r3' | 'r6'
//   rational := ['-'] digits ('/' digits)?
// Whitespace is insignificant. Throws std::runtime_error with a byte
// position on malformed input.
ExactScalar parse_scalar(const std::string& text);

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

}  // namespace sfc
