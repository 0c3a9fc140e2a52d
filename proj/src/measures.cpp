#include "sfc/measures.hpp"

#include <stdexcept>

namespace sfc {

bool is_worst_case(MeasureId id) {
    switch (id) {
        case MeasureId::WLinf: case MeasureId::WL2: case MeasureId::WL1:
        case MeasureId::WBA: case MeasureId::WBP:
        case MeasureId::WOA: case MeasureId::WOP:
            return true;
        default:
            return false;
    }
}

bool is_average(MeasureId id) { return !is_worst_case(id); }

bool needs_box(MeasureId id) {
    return id == MeasureId::WBA || id == MeasureId::WBP || id == MeasureId::ABA ||
           id == MeasureId::ABP || id == MeasureId::ADinf;
}

bool needs_octagon(MeasureId id) {
    return id == MeasureId::WOA || id == MeasureId::WOP || id == MeasureId::AOA ||
           id == MeasureId::AD1;
}

std::string measure_name(MeasureId id) {
    switch (id) {
        case MeasureId::WLinf: return "wlinf";
        case MeasureId::WL2: return "wl2";
        case MeasureId::WL1: return "wl1";
        case MeasureId::WBA: return "wba";
        case MeasureId::WBP: return "wbp";
        case MeasureId::WOA: return "woa";
        case MeasureId::WOP: return "wop";
        case MeasureId::ABA: return "aba";
        case MeasureId::ABP: return "abp";
        case MeasureId::AOA: return "aoa";
        case MeasureId::ADinf: return "adinf";
        case MeasureId::AD1: return "ad1";
    }
    return "?";
}

std::optional<MeasureId> measure_from_name(const std::string& name) {
    static const std::pair<const char*, MeasureId> table[] = {
        {"wlinf", MeasureId::WLinf}, {"wl2", MeasureId::WL2}, {"wl1", MeasureId::WL1},
        {"wba", MeasureId::WBA},     {"wbp", MeasureId::WBP}, {"woa", MeasureId::WOA},
        {"wop", MeasureId::WOP},     {"aba", MeasureId::ABA}, {"abp", MeasureId::ABP},
        {"aoa", MeasureId::AOA},     {"adinf", MeasureId::ADinf}, {"ad1", MeasureId::AD1},
    };
    for (auto& [n, id] : table)
        if (name == n) return id;
    return std::nullopt;
}

Box Box::of_points(const std::vector<Vec2>& pts) {
    if (pts.empty()) throw std::invalid_argument("Box::of_points: empty input");
    Box b = of_point(pts[0]);
    for (size_t i = 1; i < pts.size(); i++) {
        const Vec2& p = pts[i];
        if (p.x < b.xmin) b.xmin = p.x;
        if (p.x > b.xmax) b.xmax = p.x;
        if (p.y < b.ymin) b.ymin = p.y;
        if (p.y > b.ymax) b.ymax = p.y;
    }
    return b;
}

Box Box::merged(const Box& o) const {
    return {xmin < o.xmin ? xmin : o.xmin,
            xmax > o.xmax ? xmax : o.xmax,
            ymin < o.ymin ? ymin : o.ymin,
            ymax > o.ymax ? ymax : o.ymax};
}

Box Box::transformed(const AffineMap& m) const {
    if (!m.is_axis_aligned())
        throw std::domain_error("Box::transformed: map is not axis-aligned");
    Vec2 a = m.apply({xmin, ymin});
    Vec2 b = m.apply({xmax, ymax});
    Box r;
    r.xmin = a.x < b.x ? a.x : b.x;
    r.xmax = a.x < b.x ? b.x : a.x;
    r.ymin = a.y < b.y ? a.y : b.y;
    r.ymax = a.y < b.y ? b.y : a.y;
    return r;
}

std::string Box::key() const {
    std::string s = xmin.key();
    s += ','; s += xmax.key();
    s += ','; s += ymin.key();
    s += ','; s += ymax.key();
    return s;
}

namespace {

// Outward normals; diagonal ones unnormalized.
const int kNormal[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

ExactScalar support_dot(int k, const Vec2& p) {
    ExactScalar v;
    if (kNormal[k][0] == 1) v += p.x;
    else if (kNormal[k][0] == -1) v -= p.x;
    if (kNormal[k][1] == 1) v += p.y;
    else if (kNormal[k][1] == -1) v -= p.y;
    return v;
}

}  // namespace

Octagon Octagon::of_points(const std::vector<Vec2>& pts) {
    if (pts.empty()) throw std::invalid_argument("Octagon::of_points: empty input");
    Octagon o;
    for (int k = 0; k < 8; k++) {
        o.s[k] = support_dot(k, pts[0]);
        for (size_t i = 1; i < pts.size(); i++) {
            ExactScalar v = support_dot(k, pts[i]);
            if (v > o.s[k]) o.s[k] = v;
        }
    }
    return o;
}

Octagon Octagon::merged(const Octagon& o) const {
    Octagon r;
    for (int k = 0; k < 8; k++) r.s[k] = s[k] > o.s[k] ? s[k] : o.s[k];
    return r;
}

Octagon Octagon::transformed(const AffineMap& m) const {
    if (!m.is_uniform_axis_aligned())
        throw std::domain_error("Octagon::transformed: map is not a uniform axis map");
    // Support of image in direction n: scale * support(Lᵀn / scale) + n·t.
    // Lᵀn is again one of the eight directions times the scale magnitude.
    ExactScalar scale = m.m01.is_zero() ? m.m00.abs() : m.m01.abs();
    Octagon r;
    Vec2 t{m.tx, m.ty};
    for (int k = 0; k < 8; k++) {
        // Lᵀ n_k, computed exactly, then matched to a direction index.
        ExactScalar nx = m.m00 * ExactScalar(kNormal[k][0]) + m.m10 * ExactScalar(kNormal[k][1]);
        ExactScalar ny = m.m01 * ExactScalar(kNormal[k][0]) + m.m11 * ExactScalar(kNormal[k][1]);
        int sx = nx.sign(), sy = ny.sign();
        int idx = -1;
        for (int j = 0; j < 8; j++) {
            if (kNormal[j][0] == sx && kNormal[j][1] == sy) { idx = j; break; }
        }
        if (idx < 0) throw std::domain_error("Octagon::transformed: direction not preserved");
        r.s[k] = scale * s[idx] + support_dot(k, t);
    }
    return r;
}

std::array<Vec2, 8> Octagon::vertices() const {
    // Vertex v_k = intersection of boundary lines k and k+1.
    std::array<Vec2, 8> v;
    v[0] = {s[0], s[1] - s[0]};
    v[1] = {s[1] - s[2], s[2]};
    v[2] = {s[2] - s[3], s[2]};
    v[3] = {-s[4], s[3] - s[4]};
    v[4] = {-s[4], s[4] - s[5]};
    v[5] = {s[6] - s[5], -s[6]};
    v[6] = {s[7] - s[6], -s[6]};
    v[7] = {s[0], s[0] - s[7]};
    return v;
}

ExactScalar Octagon::area() const {
    auto v = vertices();
    ExactScalar two_a;
    for (int i = 0; i < 8; i++) two_a += cross(v[i], v[(i + 1) % 8]);
    return two_a / ExactScalar(2);
}

ExactScalar Octagon::perimeter() const {
    auto v = vertices();
    ExactScalar total;
    ExactScalar r2 = ExactScalar::sqrt2();
    for (int i = 0; i < 8; i++) {
        // Side i+1 runs from v[i] to v[i+1] on boundary line i+1.
        Vec2 d = v[(i + 1) % 8] - v[i];
        int k = (i + 1) % 8;
        if (kNormal[k][0] == 0 || kNormal[k][1] == 0) {
            total += d.x.abs() + d.y.abs();  // one of the two is zero
        } else {
            total += d.x.abs() * r2;  // |dx| == |dy| on diagonal sides
        }
    }
    return total;
}

std::string Octagon::key() const {
    std::string out;
    for (int k = 0; k < 8; k++) {
        out += s[k].key();
        out += ',';
    }
    return out;
}

Box hull_box(const std::vector<Vec2>& pts) { return Box::of_points(pts); }
Octagon hull_octagon(const std::vector<Vec2>& pts) { return Octagon::of_points(pts); }

namespace {

ExactScalar dist_sq_l2(const Vec2& u, const Vec2& v) {
    ExactScalar dx = u.x - v.x, dy = u.y - v.y;
    return dx * dx + dy * dy;
}

ExactScalar dist_sq_l1(const Vec2& u, const Vec2& v) {
    ExactScalar d = (u.x - v.x).abs() + (u.y - v.y).abs();
    return d * d;
}

ExactScalar dist_sq_linf(const Vec2& u, const Vec2& v) {
    ExactScalar dx = (u.x - v.x).abs(), dy = (u.y - v.y).abs();
    ExactScalar m = dx > dy ? dx : dy;
    return m * m;
}

}  // namespace

ExactScalar max_pair_dist_sq(MeasureId id, const std::vector<Vec2>& a,
                             const std::vector<Vec2>& b) {
    ExactScalar best(-1);
    for (const Vec2& u : a) {
        for (const Vec2& v : b) {
            ExactScalar d;
            switch (id) {
                case MeasureId::WLinf: d = dist_sq_linf(u, v); break;
                case MeasureId::WL2: d = dist_sq_l2(u, v); break;
                case MeasureId::WL1: d = dist_sq_l1(u, v); break;
                default: throw std::invalid_argument("max_pair_dist_sq: not a WL measure");
            }
            if (d > best) best = d;
        }
    }
    return best;
}

BoundPair mu_bounds(MeasureId id, const ProbeGeometry& g, const ExactScalar& area_scale) {
    // Relative areas: front (= whole unit region) + mid + tail.
    ExactScalar total = ExactScalar(1) + g.mid_area + g.tail_area;
    bool mid_empty = g.mid_area.is_zero();

    switch (id) {
        case MeasureId::WLinf:
        case MeasureId::WL2:
        case MeasureId::WL1: {
            ExactScalar d2 = max_pair_dist_sq(id, g.front_verts, g.tail_verts) / area_scale;
            BoundPair r;
            r.lower = d2 / total;
            if (!mid_empty) r.upper = d2 / g.mid_area;
            return r;
        }
        case MeasureId::WBA:
        case MeasureId::WBP: {
            if (!g.mid_box) throw std::invalid_argument("mu_bounds: missing mid box");
            Box whole = g.mid_box->merged(Box::of_points(g.front_verts))
                            .merged(Box::of_points(g.tail_verts));
            auto value = [&](const Box& b) {
                if (id == MeasureId::WBA) return b.area() / area_scale;
                ExactScalar p = b.perimeter();
                return p * p / (ExactScalar(16) * area_scale);
            };
            BoundPair r;
            r.lower = value(*g.mid_box) / total;
            if (!mid_empty) r.upper = value(whole) / g.mid_area;
            return r;
        }
        case MeasureId::WOA:
        case MeasureId::WOP: {
            if (!g.mid_oct) throw std::invalid_argument("mu_bounds: missing mid octagon");
            Octagon whole = g.mid_oct->merged(Octagon::of_points(g.front_verts))
                                .merged(Octagon::of_points(g.tail_verts));
            auto value = [&](const Octagon& o) {
                if (id == MeasureId::WOA) return o.area() / area_scale;
                ExactScalar p = o.perimeter();
                return p * p / (ExactScalar(16) * area_scale);
            };
            BoundPair r;
            r.lower = value(*g.mid_oct) / total;
            if (!mid_empty) r.upper = value(whole) / g.mid_area;
            return r;
        }
        default:
            throw std::invalid_argument("mu_bounds: not a worst-case measure");
    }
}

ExactScalar exact_section_measure(MeasureId id, const SectionShape& s) {
    if (s.area.sign() <= 0)
        throw std::domain_error("exact_section_measure: section area must be positive");
    switch (id) {
        case MeasureId::WLinf:
        case MeasureId::WL2:
        case MeasureId::WL1:
            return max_pair_dist_sq(id, s.endpoints_a, s.endpoints_b) / s.area;
        case MeasureId::WBA:
            return s.box->area() / s.area;
        case MeasureId::WBP: {
            ExactScalar p = s.box->perimeter();
            return p * p / (ExactScalar(16) * s.area);
        }
        case MeasureId::WOA:
            return s.oct->area() / s.area;
        case MeasureId::WOP: {
            ExactScalar p = s.oct->perimeter();
            return p * p / (ExactScalar(16) * s.area);
        }
        default:
            throw std::invalid_argument("exact_section_measure: not a worst-case measure");
    }
}

}  // namespace sfc
