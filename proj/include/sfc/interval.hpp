#pragma once

#include <string>

#include "sfc/rational.hpp"

namespace sfc {

// Closed interval with exact rational endpoints. All arithmetic encloses
// the true real result; rational operations are themselves exact, widening
// only enters through sqrt and through explicit rounding (simplify).
struct RationalInterval {
    Rational lo, hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(const Rational& v) : lo(v), hi(v) {}
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    double mid_double() const { return mid().get_d(); }

    RationalInterval operator-() const { return {-hi, -lo}; }
    RationalInterval operator+(const RationalInterval& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    RationalInterval operator-(const RationalInterval& o) const {
        return {lo - o.hi, hi - o.lo};
    }
    RationalInterval operator*(const RationalInterval& o) const;
    RationalInterval operator/(const RationalInterval& o) const;  // o must exclude 0

    RationalInterval square() const;

    // Enclosure of sqrt; requires hi >= 0 (lo is clamped to 0 if negative).
    RationalInterval sqrt(unsigned bits) const;

    // Outward rounding onto denominators 2^bits to keep numbers small.
    RationalInterval simplify(unsigned bits) const {
        return {floor_dyadic(lo, bits), ceil_dyadic(hi, bits)};
    }

    static RationalInterval hull(const RationalInterval& x, const RationalInterval& y) {
        return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
    }

    std::string str() const;
};

}  // namespace sfc
