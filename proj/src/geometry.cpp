#include "sfc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfc {

AffineMap AffineMap::compose(const AffineMap& o) const {
    AffineMap r;
    r.m00 = m00 * o.m00 + m01 * o.m10;
    r.m01 = m00 * o.m01 + m01 * o.m11;
    r.m10 = m10 * o.m00 + m11 * o.m10;
    r.m11 = m10 * o.m01 + m11 * o.m11;
    Vec2 t = apply({o.tx, o.ty});
    r.tx = t.x;
    r.ty = t.y;
    r.reversed = reversed != o.reversed;
    return r;
}

AffineMap AffineMap::inverse() const {
    ExactScalar d = det();
    if (d.is_zero()) throw std::domain_error("AffineMap: singular");
    AffineMap r;
    r.m00 = m11 / d;
    r.m01 = -m01 / d;
    r.m10 = -m10 / d;
    r.m11 = m00 / d;
    Vec2 t = r.apply_linear({tx, ty});
    r.tx = -t.x;
    r.ty = -t.y;
    r.reversed = reversed;
    return r;
}

bool AffineMap::is_uniform_axis_aligned() const {
    if (m01.is_zero() && m10.is_zero()) return m00.abs() == m11.abs();
    if (m00.is_zero() && m11.is_zero()) return m01.abs() == m10.abs();
    return false;
}

std::string AffineMap::key() const {
    std::string s;
    s += m00.key(); s += ';';
    s += m01.key(); s += ';';
    s += m10.key(); s += ';';
    s += m11.key(); s += ';';
    s += tx.key(); s += ';';
    s += ty.key(); s += ';';
    s += reversed ? '1' : '0';
    return s;
}

ExactScalar ConvexPolygon::area() const {
    ExactScalar two_a;
    size_t n = verts.size();
    for (size_t i = 0; i < n; i++) {
        const Vec2& u = verts[i];
        const Vec2& v = verts[(i + 1) % n];
        two_a += cross(u, v);
    }
    return two_a / ExactScalar(2);
}

Vec2 ConvexPolygon::centroid() const {
    size_t n = verts.size();
    ExactScalar cx, cy, two_a;
    for (size_t i = 0; i < n; i++) {
        const Vec2& u = verts[i];
        const Vec2& v = verts[(i + 1) % n];
        ExactScalar w = cross(u, v);
        cx += (u.x + v.x) * w;
        cy += (u.y + v.y) * w;
        two_a += w;
    }
    ExactScalar scale = ExactScalar(3) * two_a;
    return {cx / scale, cy / scale};
}

ConvexPolygon ConvexPolygon::transformed(const AffineMap& m) const {
    ConvexPolygon out;
    out.verts.reserve(verts.size());
    for (const Vec2& v : verts) out.verts.push_back(m.apply(v));
    if (m.det().sign() < 0) std::reverse(out.verts.begin(), out.verts.end());
    return out;
}

namespace {

// Clip polygon by halfplane cross(b - a, p - a) >= 0 (left of directed a->b).
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& a, const Vec2& b) {
    std::vector<Vec2> out;
    size_t n = poly.size();
    if (n == 0) return out;
    Vec2 dir = b - a;
    std::vector<int> side(n);
    for (size_t i = 0; i < n; i++) side[i] = cross(dir, poly[i] - a).sign();
    for (size_t i = 0; i < n; i++) {
        size_t j = (i + 1) % n;
        const Vec2& p = poly[i];
        const Vec2& q = poly[j];
        if (side[i] >= 0) out.push_back(p);
        if ((side[i] > 0 && side[j] < 0) || (side[i] < 0 && side[j] > 0)) {
            // p + t (q - p) with t = cross(dir, a - p) / cross(dir, q - p)
            ExactScalar denom = cross(dir, q - p);
            ExactScalar t = cross(dir, a - p) / denom;
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

}  // namespace

ExactScalar ConvexPolygon::intersection_area(const ConvexPolygon& other) const {
    std::vector<Vec2> poly = verts;
    size_t n = other.verts.size();
    for (size_t i = 0; i < n && !poly.empty(); i++) {
        poly = clip_halfplane(poly, other.verts[i], other.verts[(i + 1) % n]);
    }
    if (poly.size() < 3) return ExactScalar(0);
    return ConvexPolygon(std::move(poly)).area();
}

bool ConvexPolygon::contains_closed(const Vec2& p) const {
    size_t n = verts.size();
    for (size_t i = 0; i < n; i++) {
        if (cross(verts[(i + 1) % n] - verts[i], p - verts[i]).sign() < 0) return false;
    }
    return true;
}

namespace {

bool on_segment_line(const Vec2& a, const Vec2& b, const Vec2& p) {
    return cross(b - a, p - a).is_zero();
}

bool edge_on_unit_boundary(const Vec2& a, const Vec2& b, const ConvexPolygon& unit) {
    size_t n = unit.verts.size();
    for (size_t i = 0; i < n; i++) {
        const Vec2& u = unit.verts[i];
        const Vec2& v = unit.verts[(i + 1) % n];
        if (on_segment_line(u, v, a) && on_segment_line(u, v, b)) return true;
    }
    return false;
}

}  // namespace

bool cell_contains(const ConvexPolygon& cell, const Vec2& p, const ConvexPolygon& unit) {
    size_t n = cell.verts.size();
    std::vector<size_t> boundary_edges;
    for (size_t i = 0; i < n; i++) {
        const Vec2& a = cell.verts[i];
        const Vec2& b = cell.verts[(i + 1) % n];
        int s = cross(b - a, p - a).sign();
        if (s < 0) return false;
        if (s == 0) boundary_edges.push_back(i);
    }
    for (size_t i : boundary_edges) {
        const Vec2& a = cell.verts[i];
        const Vec2& b = cell.verts[(i + 1) % n];
        // CCW edge a->b: outward normal is (dy, -dx).
        Vec2 d = b - a;
        int ny = (-d.x).sign();
        int nx = d.y.sign();
        bool owns = ny < 0 || (ny == 0 && nx < 0);
        if (!owns && !edge_on_unit_boundary(a, b, unit)) return false;
    }
    return true;
}

}  // namespace sfc
