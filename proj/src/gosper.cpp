#include "sfc/gosper.hpp"

namespace sfc {

namespace {

// Complex number (re + im*i) with field entries as a rotation-scale matrix.
AffineMap complex_map(const ExactScalar& re, const ExactScalar& im,
                      const ExactScalar& tx, const ExactScalar& ty) {
    AffineMap m;
    m.m00 = re; m.m01 = -im;
    m.m10 = im; m.m11 = re;
    m.tx = tx; m.ty = ty;
    return m;
}

}  // namespace

Rational sqrt_upper(const ExactScalar& v, unsigned bits) {
    RationalInterval iv = v.enclose(bits);
    if (iv.hi < 0) throw std::domain_error("sqrt_upper: negative value");
    return sqrt_enclosure(iv.hi < 0 ? Rational(0) : iv.hi, bits).hi;
}

ScanningOrder gosper_order() {
    ScanningOrder o;
    o.name = "gosper";
    o.mode = NumericMode::Interval;

    ExactScalar r3 = ExactScalar::sqrt3();
    auto R = [](long n, long d) { return ExactScalar(Rational(n, d)); };
    auto r3f = [&](long n, long d) { return ExactScalar(Rational(0), Rational(0), Rational(n, d), Rational(0)); };

    // Steps of the first-order path from (0,0) to (5/2, -sqrt(3)/2); the
    // multiplier of step k is (unit direction k) / (5/2 - i sqrt(3)/2).
    // Reversed steps translate by the far endpoint of their segment.
    std::vector<Step> steps;
    // 0: forward, mult (5/14, r3/14), at origin
    steps.push_back({complex_map(R(5, 14), r3f(1, 14), R(0, 1), R(0, 1)), 0, false});
    // 1: reversed, mult -(2/7, -r3/7) = (-2/7, r3/7), at p2 = (3/2, -r3/2)
    steps.push_back({complex_map(R(-2, 7), r3f(1, 7), R(3, 2), r3f(-1, 2)), 0, true});
    // 2: reversed, mult (5/14, r3/14), at p3 = (1/2, -r3/2)
    steps.push_back({complex_map(R(5, 14), r3f(1, 14), R(1, 2), r3f(-1, 2)), 0, true});
    // 3: forward, mult (-1/14, -3 r3/14), at p3
    steps.push_back({complex_map(R(-1, 14), r3f(-3, 14), R(1, 2), r3f(-1, 2)), 0, false});
    // 4: forward, mult (5/14, r3/14), at p4 = (0, -r3)
    steps.push_back({complex_map(R(5, 14), r3f(1, 14), R(0, 1), r3f(-1, 1)), 0, false});
    // 5: forward, mult (5/14, r3/14), at p5 = (1, -r3)
    steps.push_back({complex_map(R(5, 14), r3f(1, 14), R(1, 1), r3f(-1, 1)), 0, false});
    // 6: reversed, mult -(1/14, 3 r3/14) = (-1/14, -3 r3/14), at p7 = (5/2, -r3/2)
    steps.push_back({complex_map(R(-1, 14), r3f(-3, 14), R(5, 2), r3f(-1, 2)), 0, true});

    o.rules.push_back({"gosper", steps});
    o.area_scale = ExactScalar(Rational(7, 2)) * r3;  // seven unit lattice tiles

    // Island center and a certified circumradius bound. The subtile centers
    // sit at distance <= 1 from the center, so R <= 1 / (1 - 7^{-1/2});
    // iterate one level for a slightly tighter certified value.
    o.center = Vec2{ExactScalar(1), r3f(-2, 3)};
    {
        // d_max over depth-2 centers + R0 / 7, with R0 = (7 + sqrt 7)/6.
        Rational r0 = (Rational(7) + sqrt_enclosure(Rational(7), 64).hi) / 6;
        auto cells = expand_cells(o, 2);
        Rational best(0);
        for (const CellInfo& c : cells) {
            Vec2 g = c.map.apply(*o.center);
            ExactScalar d2 = (g.x - o.center->x) * (g.x - o.center->x) +
                             (g.y - o.center->y) * (g.y - o.center->y);
            Rational d = sqrt_upper(d2, 48);
            if (d > best) best = d;
        }
        o.radius_hi = best + r0 / 7;
    }

    // Curve endpoints: certified points of the region for lower bounds.
    o.anchors = {Vec2{ExactScalar(0), ExactScalar(0)}, Vec2{R(5, 2), r3f(-1, 2)}};

    o.finalize();
    return o;
}

}  // namespace sfc
