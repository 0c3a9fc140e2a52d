#include "sfc/exact.hpp"

#include <cctype>
#include <sstream>

#include "sfc/interval.hpp"

namespace sfc {

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

RatPair sqrt_enclosure(const Rational& n, unsigned bits) {
    if (n < 0) throw std::runtime_error("sqrt_enclosure: negative argument");
    // sqrt(p/q) in [ isqrt(p*q*4^k) / (q*2^k), (isqrt+1) / (q*2^k) ].
    Integer p = n.get_num(), q = n.get_den();
    Integer scale = Integer(1) << bits;
    Integer m = isqrt(p * q * scale * scale);
    Rational lo(m, q * scale), hi(m + 1, q * scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

std::string rat_str(const Rational& q) {
    return q.get_str();
}

Rational floor_dyadic(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), Integer(q.get_num() * scale).get_mpz_t(),
               q.get_den().get_mpz_t());
    Rational r(n, scale);
    r.canonicalize();
    return r;
}

Rational ceil_dyadic(const Rational& q, unsigned bits) {
    Integer scale = Integer(1) << bits;
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), Integer(q.get_num() * scale).get_mpz_t(),
               q.get_den().get_mpz_t());
    Rational r(n, scale);
    r.canonicalize();
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    // (a1 + b1 r2 + c1 r3 + d1 r6)(a2 + b2 r2 + c2 r3 + d2 r6), with
    // r2*r3 = r6, r2*r6 = 2 r3, r3*r6 = 3 r2.
    return ExactScalar(
        a * o.a + 2 * (b * o.b) + 3 * (c * o.c) + 6 * (d * o.d),
        a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
        a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
        a * o.d + d * o.a + b * o.c + c * o.b);
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    if (o.is_zero()) throw std::domain_error("ExactScalar: division by zero");
    // Conjugate over sqrt(2): x * conj2(x) lands in Q[sqrt(3)].
    ExactScalar conj2(o.a, -o.b, o.c, -o.d);
    ExactScalar y = o * conj2;  // y.b == y.d == 0
    // Invert p + q*sqrt(3): (p - q*sqrt(3)) / (p^2 - 3 q^2).
    Rational denom = y.a * y.a - 3 * (y.c * y.c);
    ExactScalar inv_y(y.a / denom, Rational(0), -y.c / denom, Rational(0));
    ExactScalar inv = conj2 * inv_y;
    return *this * inv;
}

namespace {

RationalInterval eval_interval(const ExactScalar& x, unsigned bits) {
    RatPair r2 = sqrt_enclosure(Rational(2), bits);
    RatPair r3 = sqrt_enclosure(Rational(3), bits);
    RatPair r6 = sqrt_enclosure(Rational(6), bits);
    auto term = [](const Rational& coef, const RatPair& r) -> RationalInterval {
        if (coef >= 0) return {coef * r.lo, coef * r.hi};
        return {coef * r.hi, coef * r.lo};
    };
    RationalInterval acc(x.a);
    acc = acc + term(x.b, r2);
    acc = acc + term(x.c, r3);
    acc = acc + term(x.d, r6);
    return acc;
}

}  // namespace

int ExactScalar::sign() const {
    if (is_rational()) return sgn(a);
    if (is_zero()) return 0;
    for (unsigned bits = 32;; bits *= 2) {
        RationalInterval iv = eval_interval(*this, bits);
        if (iv.lo > 0) return 1;
        if (iv.hi < 0) return -1;
        if (iv.lo == 0 && iv.hi == 0) return 0;
        if (bits > 1 << 16)
            throw std::runtime_error("ExactScalar::sign failed to separate from zero");
    }
}

double ExactScalar::to_double() const {
    static const double s2 = 1.4142135623730951, s3 = 1.7320508075688772,
                        s6 = 2.449489742783178;
    return a.get_d() + b.get_d() * s2 + c.get_d() * s3 + d.get_d() * s6;
}

RationalInterval ExactScalar::enclose(unsigned bits) const {
    if (bits < 1) bits = 1;
    for (unsigned p = bits + 4;; p *= 2) {
        RationalInterval iv = eval_interval(*this, p);
        Rational mag = std::max(Rational(::abs(iv.lo)), Rational(::abs(iv.hi)));
        Rational limit = std::max(Rational(1), mag);
        Integer scale = Integer(1) << bits;
        if (iv.width() * scale <= limit) return iv;
    }
}

std::string ExactScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& coef, const char* radical) {
        if (coef == 0) return;
        Rational c = coef;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        os << c.get_str();
        if (radical) os << "*" << radical;
        first = false;
    };
    emit(a, nullptr);
    emit(b, "r2");
    emit(c, "r3");
    emit(d, "r6");
    return os.str();
}

std::string ExactScalar::key() const {
    std::string s = a.get_str();
    s += '|';
    s += b.get_str();
    s += '|';
    s += c.get_str();
    s += '|';
    s += d.get_str();
    return s;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    std::optional<int> try_radical() {
        skip_ws();
        if (pos + 1 < s.size() && s[pos] == 'r') {
            char c = s[pos + 1];
            if (c == '2' || c == '3' || c == '6') {
                pos += 2;
                return c - '0';
            }
            fail("unknown radical, expected r2, r3 or r6");
        }
        return std::nullopt;
    }

    Rational rational(bool allow_sign) {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (allow_sign && pos < s.size() && s[pos] == '-') { neg = true; pos++; skip_ws(); }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected digits");
        Integer num = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            num = num * 10 + (s[pos] - '0');
            pos++;
        }
        Integer den = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            pos++;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected digits after '/'");
            den = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                den = den * 10 + (s[pos] - '0');
                pos++;
            }
            if (den == 0) { pos = start; fail("zero denominator"); }
        }
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    ExactScalar term(bool lead_sign) {
        if (auto rad = try_radical()) return make(Rational(1), *rad);
        Rational coef = rational(lead_sign);
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            pos++;
            auto rad = try_radical();
            if (!rad) fail("expected radical after '*'");
            return make(coef, *rad);
        }
        return ExactScalar(coef);
    }

    static ExactScalar make(const Rational& coef, int rad) {
        switch (rad) {
            case 2: return ExactScalar(Rational(0), coef, Rational(0), Rational(0));
            case 3: return ExactScalar(Rational(0), Rational(0), coef, Rational(0));
            default: return ExactScalar(Rational(0), Rational(0), Rational(0), coef);
        }
    }

    ExactScalar expr() {
        ExactScalar acc = term(true);
        while (!eof()) {
            char c = peek();
            if (c == '+' || c == '-') {
                pos++;
                ExactScalar t = term(false);
                acc = c == '+' ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

ExactScalar parse_scalar(const std::string& text) {
    Parser p(text);
    ExactScalar v = p.expr();
    if (!p.eof()) p.fail("trailing characters");
    return v;
}

}  // namespace sfc
