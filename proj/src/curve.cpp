#include "sfc/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sfc {

void ScanningOrder::finalize() {
    if (rules.empty()) throw std::runtime_error("scanning order has no rules");
    axis_aligned = true;
    uniform_axis = true;
    for (const Rule& r : rules) {
        if (r.steps.empty()) throw std::runtime_error("rule without steps: " + r.name);
        for (const Step& s : r.steps) {
            if (s.child < 0 || s.child >= static_cast<int>(rules.size()))
                throw std::runtime_error("rule reference out of range in " + r.name);
            if (!s.map.is_axis_aligned()) axis_aligned = false;
            if (!s.map.is_uniform_axis_aligned()) uniform_axis = false;
        }
    }
}

bool ScanningOrder::supports(MeasureId id) const {
    if (mode == NumericMode::Interval) {
        // Rotations with irrational angle: only the L2 measure survives.
        return id == MeasureId::WL2;
    }
    switch (id) {
        case MeasureId::WLinf:
        case MeasureId::WL2:
        case MeasureId::WL1:
            return true;
        case MeasureId::WBA:
        case MeasureId::WBP:
        case MeasureId::ABA:
        case MeasureId::ABP:
        case MeasureId::ADinf:
            return axis_aligned;
        case MeasureId::WOA:
        case MeasureId::WOP:
        case MeasureId::AOA:
        case MeasureId::AD1:
            return uniform_axis;
    }
    return false;
}

namespace {

// Interval-mode orders have fractal cell boundaries; the cells at a fixed
// depth are congruent lattice tiles, so exact area sums plus distinct tile
// centers at unit lattice spacing certify the tiling.
TilingReport validate_interval_mode(const ScanningOrder& order, int depth) {
    TilingReport report;
    report.note = "interval mode: disjointness certified by lattice translation";
    auto cells = expand_cells(order, depth);
    RuleReport rr;
    rr.rule = "depth-" + std::to_string(depth);
    ExactScalar sum;
    std::vector<Vec2> centers;
    centers.reserve(cells.size());
    for (const CellInfo& c : cells) {
        sum += c.rel_area;
        centers.push_back(c.map.apply(*order.center));
    }
    rr.area_sum = sum;
    rr.area_ok = sum == ExactScalar(1);
    rr.max_overlap = ExactScalar(0);
    bool distinct = true;
    for (size_t i = 0; i < centers.size() && distinct; i++)
        for (size_t j = i + 1; j < centers.size(); j++)
            if (centers[i] == centers[j]) { distinct = false; break; }
    rr.pass = rr.area_ok && distinct;
    report.pass = rr.pass;
    report.rules.push_back(std::move(rr));
    return report;
}

}  // namespace

TilingReport validate(const ScanningOrder& order) {
    if (order.mode == NumericMode::Interval) return validate_interval_mode(order, 1);
    TilingReport report;
    report.pass = true;
    for (const Rule& r : order.rules) {
        RuleReport rr;
        rr.rule = r.name;
        ExactScalar sum;
        std::vector<ConvexPolygon> regions;
        regions.reserve(r.steps.size());
        for (const Step& s : r.steps) {
            sum += s.map.det_abs();
            regions.push_back(order.unit.transformed(s.map));
        }
        rr.area_sum = sum;
        rr.area_ok = sum == ExactScalar(1);
        rr.max_overlap = ExactScalar(0);
        for (size_t i = 0; i < regions.size(); i++) {
            for (size_t j = i + 1; j < regions.size(); j++) {
                ExactScalar ov = regions[i].intersection_area(regions[j]);
                if (ov > rr.max_overlap) rr.max_overlap = ov;
            }
        }
        rr.pass = rr.area_ok && rr.max_overlap.is_zero();
        report.pass = report.pass && rr.pass;
        report.rules.push_back(std::move(rr));
    }
    return report;
}

std::vector<CellInfo> expand_cells(const ScanningOrder& order, int depth, size_t budget) {
    std::vector<CellInfo> cells;
    struct Frame {
        AffineMap map;
        ExactScalar area;
        int rule;
        bool reversed;
    };
    std::vector<Frame> current{{AffineMap::identity(), ExactScalar(1), order.root, false}};
    for (int level = 0; level < depth; level++) {
        std::vector<Frame> next;
        size_t expected = 0;
        for (const Frame& f : current) expected += order.rule(f.rule).steps.size();
        if (expected > budget) throw std::runtime_error("cell budget exceeded");
        next.reserve(expected);
        for (const Frame& f : current) {
            const Rule& r = order.rule(f.rule);
            int n = static_cast<int>(r.steps.size());
            for (int k = 0; k < n; k++) {
                int raw = f.reversed ? n - 1 - k : k;
                const Step& s = r.steps[raw];
                next.push_back({f.map.compose(s.map), f.area * s.map.det_abs(),
                                s.child, f.reversed != s.reversed});
            }
        }
        current = std::move(next);
    }
    cells.reserve(current.size());
    for (Frame& f : current)
        cells.push_back({std::move(f.map), std::move(f.area), f.rule, f.reversed});
    return cells;
}

TilingReport validate_depth(const ScanningOrder& order, int depth) {
    if (order.mode == NumericMode::Interval) return validate_interval_mode(order, depth);
    TilingReport report;
    auto cells = expand_cells(order, depth);
    RuleReport rr;
    rr.rule = "depth-" + std::to_string(depth);
    ExactScalar sum;
    std::vector<ConvexPolygon> regions;
    std::vector<Box> boxes;
    regions.reserve(cells.size());
    for (const CellInfo& c : cells) {
        sum += c.rel_area;
        regions.push_back(order.unit.transformed(c.map));
        boxes.push_back(Box::of_points(regions.back().verts));
    }
    rr.area_sum = sum;
    rr.area_ok = sum == ExactScalar(1);
    rr.max_overlap = ExactScalar(0);
    // Boxes prune distant pairs; ties on shared boundaries clip to area 0.
    for (size_t i = 0; i < regions.size(); i++) {
        for (size_t j = i + 1; j < regions.size(); j++) {
            if ((boxes[i].xmax < boxes[j].xmin) || (boxes[j].xmax < boxes[i].xmin) ||
                (boxes[i].ymax < boxes[j].ymin) || (boxes[j].ymax < boxes[i].ymin))
                continue;
            ExactScalar ov = regions[i].intersection_area(regions[j]);
            if (ov > rr.max_overlap) rr.max_overlap = ov;
        }
    }
    rr.pass = rr.area_ok && rr.max_overlap.is_zero();
    report.pass = rr.pass;
    report.rules.push_back(std::move(rr));
    return report;
}

ConvexPolygon cell_region(const ScanningOrder& order, const CellAddress& addr) {
    AffineMap acc = AffineMap::identity();
    int rule = order.root;
    for (int digit : addr.digits) {
        const Rule& r = order.rule(rule);
        if (digit < 0 || digit >= static_cast<int>(r.steps.size()))
            throw std::out_of_range("cell address digit out of range");
        acc = acc.compose(r.steps[digit].map);
        rule = r.steps[digit].child;
    }
    return order.unit.transformed(acc);
}

Ordering compare(const ScanningOrder& order, const Vec2& p, const Vec2& q, int max_depth) {
    if (order.mode == NumericMode::Interval)
        throw std::domain_error("compare: not supported for interval-mode orders");
    if (!order.unit.contains_closed(p) || !order.unit.contains_closed(q))
        throw std::domain_error("compare: point outside the unit region");

    AffineMap frame = AffineMap::identity();
    int rule = order.root;
    bool reversed = false;
    for (int level = 0; level < max_depth; level++) {
        const Rule& r = order.rule(rule);
        int n = static_cast<int>(r.steps.size());
        int pos_p = -1, pos_q = -1;
        int raw_p = -1;
        for (int k = 0; k < n; k++) {
            int raw = reversed ? n - 1 - k : k;
            ConvexPolygon cell = order.unit.transformed(frame.compose(r.steps[raw].map));
            bool has_p = pos_p < 0 && cell_contains(cell, p, order.unit);
            bool has_q = pos_q < 0 && cell_contains(cell, q, order.unit);
            if (has_p) { pos_p = k; raw_p = raw; }
            if (has_q) pos_q = k;
            if (pos_p >= 0 && pos_q >= 0) break;
        }
        if (pos_p < 0 || pos_q < 0)
            throw std::runtime_error("compare: point location failed");
        if (pos_p != pos_q) return pos_p < pos_q ? Ordering::Before : Ordering::After;
        const Step& s = order.rule(rule).steps[raw_p];
        frame = frame.compose(s.map);
        reversed = reversed != s.reversed;
        rule = s.child;
    }
    return Ordering::Undecided;
}

std::vector<Vec2> polyline(const ScanningOrder& order, int depth, size_t budget) {
    if (depth < 1) throw std::invalid_argument("polyline: depth must be >= 1");
    auto cells = expand_cells(order, depth, budget);
    Vec2 c0 = order.center ? *order.center : order.unit.centroid();
    std::vector<Vec2> pts;
    pts.reserve(cells.size());
    for (const CellInfo& c : cells) pts.push_back(c.map.apply(c0));
    return pts;
}

}  // namespace sfc
