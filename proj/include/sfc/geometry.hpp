#pragma once

#include <vector>

#include "sfc/exact.hpp"

namespace sfc {

struct Vec2 {
    ExactScalar x, y;

    Vec2() = default;
    Vec2(ExactScalar xv, ExactScalar yv) : x(std::move(xv)), y(std::move(yv)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline ExactScalar cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline ExactScalar dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Affine map p -> L p + t with an order-reversal flag. The flag is not part
// of the geometry; it composes by XOR along rule paths.
struct AffineMap {
    ExactScalar m00, m01, m10, m11;
    ExactScalar tx, ty;
    bool reversed = false;

    static AffineMap identity() {
        AffineMap m;
        m.m00 = ExactScalar(1); m.m11 = ExactScalar(1);
        return m;
    }

    Vec2 apply(const Vec2& p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
    Vec2 apply_linear(const Vec2& p) const {
        return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y};
    }

    ExactScalar det() const { return m00 * m11 - m01 * m10; }
    ExactScalar det_abs() const { return det().abs(); }

    // this(other(p)); reversal flags XOR.
    AffineMap compose(const AffineMap& o) const;
    AffineMap inverse() const;

    // Linear part has the form [s 0; 0 t] or [0 s; t 0] (axis-aligned boxes
    // map to axis-aligned boxes).
    bool is_axis_aligned() const {
        return (m01.is_zero() && m10.is_zero()) || (m00.is_zero() && m11.is_zero());
    }
    // Axis-aligned with |s| == |t|: the octagon direction set is permuted.
    bool is_uniform_axis_aligned() const;

    bool operator==(const AffineMap& o) const {
        return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11 &&
               tx == o.tx && ty == o.ty && reversed == o.reversed;
    }

    std::string key() const;
};

// Convex polygon, vertices in counterclockwise order.
struct ConvexPolygon {
    std::vector<Vec2> verts;

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Vec2> v) : verts(std::move(v)) {}

    ExactScalar area() const;           // positive for CCW
    Vec2 centroid() const;
    ConvexPolygon transformed(const AffineMap& m) const;  // stays CCW

    // Exact area of intersection with another convex polygon.
    ExactScalar intersection_area(const ConvexPolygon& other) const;

    // Closed containment (no tie rules).
    bool contains_closed(const Vec2& p) const;
};

// Membership with the scanning-order boundary convention: a boundary point
// belongs to the cell when every incident edge either has outward normal
// pointing downward (region above owns the edge), is vertical with outward
// normal pointing left (region to the right owns it), or lies on the
// boundary of the enclosing unit region.
bool cell_contains(const ConvexPolygon& cell, const Vec2& p, const ConvexPolygon& unit);

}  // namespace sfc
