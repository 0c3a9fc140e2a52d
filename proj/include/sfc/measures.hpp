#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sfc/geometry.hpp"

namespace sfc {

enum class MeasureId {
    WLinf, WL2, WL1,      // worst-case locality, squared L_r distance / area
    WBA, WBP,             // bounding-box area / squared-perimeter (÷16) ratio
    WOA, WOP,             // bounding-octagon analogues
    ABA, ABP, AOA,        // average total box area / rel. perimeter² / oct area
    ADinf, AD1            // average relative total section diameter (squared)
};

bool is_worst_case(MeasureId id);
bool is_average(MeasureId id);
bool needs_box(MeasureId id);
bool needs_octagon(MeasureId id);
std::string measure_name(MeasureId id);
std::optional<MeasureId> measure_from_name(const std::string& name);

struct Box {
    ExactScalar xmin, xmax, ymin, ymax;

    static Box of_point(const Vec2& p) { return {p.x, p.x, p.y, p.y}; }
    static Box of_points(const std::vector<Vec2>& pts);

    ExactScalar width() const { return xmax - xmin; }
    ExactScalar height() const { return ymax - ymin; }
    ExactScalar area() const { return width() * height(); }
    ExactScalar perimeter() const { return ExactScalar(2) * (width() + height()); }

    Box merged(const Box& o) const;
    Box translated(const Vec2& t) const {
        return {xmin + t.x, xmax + t.x, ymin + t.y, ymax + t.y};
    }
    // Requires an axis-aligned map.
    Box transformed(const AffineMap& m) const;

    bool operator==(const Box& o) const {
        return xmin == o.xmin && xmax == o.xmax && ymin == o.ymin && ymax == o.ymax;
    }
    std::string key() const;
};

// Convex octagon stored as support values for outward normals at k*45deg,
// k = 0..7. Supports for the diagonal normals are kept pre-multiplied by
// sqrt(2), i.e. s1 = max(x+y), s3 = max(y-x), s5 = max(-x-y), s7 = max(x-y),
// so every support stays a plain field element.
struct Octagon {
    std::array<ExactScalar, 8> s;

    static Octagon of_points(const std::vector<Vec2>& pts);

    Octagon merged(const Octagon& o) const;
    // Requires a uniform axis-aligned map (|sx| == |sy|).
    Octagon transformed(const AffineMap& m) const;

    std::array<Vec2, 8> vertices() const;
    ExactScalar area() const;
    ExactScalar perimeter() const;  // exact, lives in Q[sqrt 2]

    // Extent along (1,1) and along (1,-1); both are exact L1 diameters of
    // any point set realizing the supports.
    ExactScalar diag_extent_sum() const { return s[1] + s[5]; }
    ExactScalar diag_extent_diff() const { return s[3] + s[7]; }

    bool operator==(const Octagon& o) const { return s == o.s; }
    std::string key() const;
};

Box hull_box(const std::vector<Vec2>& pts);
Octagon hull_octagon(const std::vector<Vec2>& pts);

// Everything a worst-case bound evaluator reads off a probe: the front and
// tail regions (as vertex sets), the midsection summary, and the area split.
// Areas are fractions of the whole curve; geometry is in the curve's frame,
// whose absolute area is area_scale (1 for most curves).
struct ProbeGeometry {
    std::vector<Vec2> front_verts;
    std::vector<Vec2> tail_verts;
    ExactScalar mid_area;    // relative
    ExactScalar tail_area;   // relative
    const Box* mid_box = nullptr;
    const Octagon* mid_oct = nullptr;
};

struct BoundPair {
    ExactScalar lower;
    std::optional<ExactScalar> upper;  // nullopt = infinity
};

// Certified lower/upper bounds on the worst section ratio represented by a
// probe. area_scale converts frame geometry to true unit-area terms.
BoundPair mu_bounds(MeasureId id, const ProbeGeometry& g, const ExactScalar& area_scale);

// One concrete section: ratio of the chosen hull quantity to the section
// area (both in the same frame, so no scale parameter). For the WL measures
// the "section" is a pair of endpoints carried in endpoints.
struct SectionShape {
    ExactScalar area;
    std::optional<Box> box;
    std::optional<Octagon> oct;
    std::vector<Vec2> endpoints_a, endpoints_b;  // for WL evaluation
};

ExactScalar exact_section_measure(MeasureId id, const SectionShape& s);

// Max over vertex pairs of the squared L_r distance.
ExactScalar max_pair_dist_sq(MeasureId id, const std::vector<Vec2>& a,
                             const std::vector<Vec2>& b);

}  // namespace sfc
