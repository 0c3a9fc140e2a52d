#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sfc/exact.hpp"
#include "sfc/interval.hpp"

using namespace sfc;

namespace {
ExactScalar sc(long a, long b = 0, long c = 0, long d = 0) {
    return ExactScalar(Rational(a), Rational(b), Rational(c), Rational(d));
}
}

TEST_CASE("field closure products") {
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt3() == ExactScalar::sqrt6());
    // (1 + r2)(1 - r2) = -1
    CHECK((sc(1, 1) * sc(1, -1)) == sc(-1));
    // r2 * r6 = 2 r3, r3 * r6 = 3 r2
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt6() == sc(0, 0, 2, 0));
    CHECK(ExactScalar::sqrt3() * ExactScalar::sqrt6() == sc(0, 3, 0, 0));
}

TEST_CASE("square of 1/3 + (1/3) r3, expanded by hand") {
    // (1/3)^2 + 2*(1/3)*(1/3) r3 + (1/3)^2 * 3 = 4/9 + (2/9) r3
    ExactScalar x(Rational(1, 3), Rational(0), Rational(1, 3), Rational(0));
    ExactScalar expected(Rational(4, 9), Rational(0), Rational(2, 9), Rational(0));
    CHECK(x * x == expected);
}

TEST_CASE("division is exact field inverse") {
    ExactScalar x(Rational(3, 7), Rational(-2, 5), Rational(1, 3), Rational(4));
    ExactScalar y(Rational(1, 2), Rational(1), Rational(-1, 6), Rational(2, 9));
    CHECK((x / y) * y == x);
    CHECK_THROWS_AS(x / sc(0), std::domain_error);
}

TEST_CASE("sign determination") {
    CHECK(sc(0).sign() == 0);
    CHECK(sc(3, -2).sign() == 1);          // 3 - 2 r2 > 0
    CHECK(sc(7, 0, -4).sign() == 1);       // 7 - 4 r3 > 0
    CHECK(sc(-7, 0, 4).sign() == -1);      // -7 + 4 r3 < 0
    // A value needing some refinement: r2 + r3 - r6 + small rational offset.
    ExactScalar tight = sc(0, 1, 1, -1) - ExactScalar(Rational(706, 1000));
    CHECK(tight.sign() == 1);  // r2 + r3 - r6 = 0.70658...
    ExactScalar tight2 = sc(0, 1, 1, -1) - ExactScalar(Rational(707, 1000));
    CHECK(tight2.sign() == -1);
}

TEST_CASE("sign properties on random field elements") {
    // sign(x) * sign(-x) in {0, -1}, sign(x*x) in {0, +1}
    uint64_t state = 12345;
    auto next = [&]() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    for (int i = 0; i < 2000; i++) {
        auto coef = [&]() {
            long num = static_cast<long>(next() % 41) - 20;
            long den = 1 + static_cast<long>(next() % 9);
            return Rational(num, den);
        };
        ExactScalar x(coef(), coef(), coef(), coef());
        int s = x.sign(), sneg = (-x).sign();
        CHECK(s * sneg <= 0);
        CHECK(((s == 0) == (sneg == 0)));
        CHECK((x * x).sign() >= 0);
    }
}

TEST_CASE("enclosures") {
    RationalInterval half = ExactScalar(Rational(1, 2)).enclose(10);
    CHECK(half.lo == Rational(1, 2));
    CHECK(half.hi == Rational(1, 2));

    RationalInterval r2 = ExactScalar::sqrt2().enclose(20);
    CHECK(r2.lo <= Rational(14142136, 10000000));
    CHECK(r2.hi >= Rational(14142135, 10000000));
    CHECK(r2.width() <= Rational(2, 1 << 20));

    RationalInterval v = (ExactScalar(2) + ExactScalar::sqrt3()).enclose(10);
    CHECK(v.lo >= Rational(3731, 1000));
    CHECK(v.hi <= Rational(3733, 1000));
}

TEST_CASE("nested enclosures") {
    ExactScalar x(Rational(-3, 7), Rational(2, 3), Rational(5, 11), Rational(-1, 9));
    RationalInterval coarse = x.enclose(12);
    RationalInterval fine = x.enclose(12 + 16);
    CHECK(coarse.lo <= fine.lo);
    CHECK(fine.hi <= coarse.hi);
}

TEST_CASE("scalar grammar parse") {
    CHECK(parse_scalar("1/3") == ExactScalar(Rational(1, 3)));
    CHECK(parse_scalar("-1/2*r2") == ExactScalar(Rational(0), Rational(-1, 2), Rational(0), Rational(0)));
    CHECK(parse_scalar("1/3*r3 + 1") ==
          ExactScalar(Rational(1), Rational(0), Rational(1, 3), Rational(0)));
    CHECK(parse_scalar("r2") == ExactScalar::sqrt2());
    CHECK(parse_scalar(" 2 - r6 ") == sc(2, 0, 0, -1));
    CHECK_THROWS_AS(parse_scalar("1/"), ParseError);
    CHECK_THROWS_AS(parse_scalar("r5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 + "), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
}

TEST_CASE("print/parse round trip on canonical forms") {
    std::vector<ExactScalar> values = {
        sc(0), sc(-1), ExactScalar(Rational(22, 7)),
        ExactScalar(Rational(4, 9), Rational(0), Rational(2, 9), Rational(0)),
        ExactScalar(Rational(-1, 2), Rational(3, 4), Rational(0), Rational(-5, 6)),
        ExactScalar::sqrt6(),
    };
    for (const ExactScalar& v : values) {
        CAPTURE(v.str());
        CHECK(parse_scalar(v.str()) == v);
    }
}

TEST_CASE("interval arithmetic soundness on random rationals") {
    uint64_t state = 99;
    auto next = [&]() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    for (int i = 0; i < 500; i++) {
        Rational a(static_cast<long>(next() % 2001) - 1000, 1 + static_cast<long>(next() % 50));
        Rational b(static_cast<long>(next() % 2001) - 1000, 1 + static_cast<long>(next() % 50));
        RationalInterval ia(a), ib(b);
        Rational exact = a * b + a - b;
        RationalInterval got = ia * ib + ia - ib;
        CHECK(got.contains(exact));
        RationalInterval wide(a - Rational(1, 100), a + Rational(1, 100));
        CHECK(wide.square().contains(a * a));
    }
}

TEST_CASE("interval sqrt and simplify") {
    RationalInterval two(Rational(2));
    RationalInterval r = two.sqrt(30);
    CHECK(r.lo * r.lo <= Rational(2));
    CHECK(r.hi * r.hi >= Rational(2));
    CHECK(r.width() <= Rational(1, 1 << 20));

    RationalInterval messy(Rational(1, 3), Rational(2, 3));
    RationalInterval rounded = messy.simplify(8);
    CHECK(rounded.lo <= messy.lo);
    CHECK(rounded.hi >= messy.hi);
    CHECK(rounded.lo.get_den() <= 256);
}
