#include "sfc/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sfc {

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
    Rational p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RationalInterval RationalInterval::operator/(const RationalInterval& o) const {
    if (o.contains_zero())
        throw std::domain_error("RationalInterval: division by interval containing zero");
    RationalInterval inv(Rational(1) / o.hi, Rational(1) / o.lo);
    return *this * inv;
}

RationalInterval RationalInterval::square() const {
    if (lo >= 0) return {lo * lo, hi * hi};
    if (hi <= 0) return {hi * hi, lo * lo};
    return {Rational(0), std::max(lo * lo, hi * hi)};
}

RationalInterval RationalInterval::sqrt(unsigned bits) const {
    if (hi < 0) throw std::domain_error("RationalInterval::sqrt of negative interval");
    Rational l = lo < 0 ? Rational(0) : lo;
    RatPair a = sqrt_enclosure(l, bits);
    RatPair b = sqrt_enclosure(hi, bits);
    return {a.lo, b.hi};
}

std::string RationalInterval::str() const {
    std::ostringstream os;
    os << "[" << lo.get_str() << ", " << hi.get_str() << "]";
    return os.str();
}

}  // namespace sfc
