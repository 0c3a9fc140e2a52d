#include "sfc/probe_search.hpp"

#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

#include "sfc/gosper.hpp"

#ifdef SFC_HAVE_OPENMP
#include <omp.h>
#endif

namespace sfc {

std::string Probe::fingerprint() const {
    std::string s;
    s.reserve(128);
    s += std::to_string(front.rule);
    s += front.reversed ? 'r' : 'f';
    s += std::to_string(tail.rule);
    s += tail.reversed ? 'r' : 'f';
    s += '|';
    s += omega.key();
    s += '|';
    s += mid_area.key();
    if (mid_box) { s += '|'; s += mid_box->key(); }
    if (mid_oct) { s += '|'; s += mid_oct->key(); }
    return s;
}

ProbeModel::ProbeModel(const ScanningOrder& order, MeasureId measure)
    : order_(&order), measure_(measure) {
    if (!order.supports(measure)) {
        std::string why;
        if (order.mode == NumericMode::Interval) {
            why = "rotation angles are irrational fractions of pi, so box and octagon "
                  "summaries cannot be maintained; wl2 is rotation-invariant and "
                  "determines wlinf = wl2 and wl1 = 2*wl2 for this order";
        } else if (!order.axis_aligned) {
            why = "transforms are not axis-aligned, so box summaries are unavailable";
        } else {
            why = "transforms are not uniform axis maps, so octagon summaries are unavailable";
        }
        throw std::domain_error("measure " + measure_name(measure) + " unsupported for " +
                                order.name + ": " + why);
    }
    track_box_ = needs_box(measure);
    track_oct_ = needs_octagon(measure);
    bool have_polygon = !order.unit.verts.empty();
    if (have_polygon) unit_verts_ = order.unit.verts;

    rules_.resize(order.rules.size());
    // Reachability from the root.
    std::vector<char> seen(order.rules.size(), 0);
    std::vector<int> stack{order.root};
    seen[order.root] = 1;
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        reachable_.push_back(r);
        for (const Step& s : order.rules[r].steps) {
            if (!seen[s.child]) { seen[s.child] = 1; stack.push_back(s.child); }
        }
    }
    std::sort(reachable_.begin(), reachable_.end());

    for (int r : reachable_) {
        const Rule& rule = order.rules[r];
        RulePre& pre = rules_[r];
        pre.n = static_cast<int>(rule.steps.size());
        pre.map.reserve(pre.n);
        for (const Step& s : rule.steps) {
            pre.map.push_back(s.map);
            pre.inv.push_back(s.map.inverse());
            pre.area.push_back(s.map.det_abs());
            pre.child.push_back(s.child);
            pre.rev.push_back(s.reversed ? 1 : 0);
        }
        // Strict prefix/suffix aggregates over raw step indices.
        pre.pre.resize(pre.n + 1);
        pre.suf.resize(pre.n + 1);
        Agg acc;
        acc.area = ExactScalar(0);
        for (int i = 0; i <= pre.n; i++) {
            pre.pre[i] = acc;
            if (i == pre.n) break;
            acc.area += pre.area[i];
            if (have_polygon && (track_box_ || track_oct_)) {
                ConvexPolygon cell = order.unit.transformed(pre.map[i]);
                if (track_box_ || track_oct_) {
                    Box b = Box::of_points(cell.verts);
                    acc.box = acc.box ? acc.box->merged(b) : b;
                }
                if (track_oct_) {
                    Octagon oc = Octagon::of_points(cell.verts);
                    acc.oct = acc.oct ? acc.oct->merged(oc) : oc;
                }
            }
        }
        acc = Agg{};
        acc.area = ExactScalar(0);
        for (int i = pre.n; i >= 0; i--) {
            pre.suf[i] = acc;
            if (i == 0) break;
            int k = i - 1;
            acc.area += pre.area[k];
            if (have_polygon && (track_box_ || track_oct_)) {
                ConvexPolygon cell = order.unit.transformed(pre.map[k]);
                Box b = Box::of_points(cell.verts);
                acc.box = acc.box ? acc.box->merged(b) : b;
                if (track_oct_) {
                    Octagon oc = Octagon::of_points(cell.verts);
                    acc.oct = acc.oct ? acc.oct->merged(oc) : oc;
                }
            }
        }
    }
}

std::vector<Probe> ProbeModel::base_probes() const {
    std::vector<Probe> out;
    bool have_polygon = !unit_verts_.empty();
    for (int r : reachable_) {
        const RulePre& pre = rules_[r];
        for (int i = 0; i < pre.n; i++) {
            const AffineMap& inv_i = pre.inv[i];
            for (int k = i + 1; k < pre.n; k++) {
                Probe p;
                p.front = {pre.child[i], pre.rev[i] != 0};
                p.tail = {pre.child[k], pre.rev[k] != 0};
                p.omega = inv_i.compose(pre.map[k]);
                ExactScalar mid;
                std::optional<Box> box;
                std::optional<Octagon> oct;
                for (int s = i + 1; s < k; s++) {
                    mid += pre.area[s];
                    if (have_polygon && (track_box_ || track_oct_)) {
                        ConvexPolygon cell = order_->unit.transformed(inv_i.compose(pre.map[s]));
                        Box b = Box::of_points(cell.verts);
                        box = box ? box->merged(b) : b;
                        if (track_oct_) {
                            Octagon oc = Octagon::of_points(cell.verts);
                            oct = oct ? oct->merged(oc) : oc;
                        }
                    }
                }
                // Midsection area is invariant under the front normalization
                // only relative to the parent cell; rescale by 1/|det tau(i)|.
                p.mid_area = mid / pre.area[i];
                if (track_box_) p.mid_box = box;
                if (track_oct_) p.mid_oct = oct;
                out.push_back(std::move(p));
            }
        }
    }
    return out;
}

Probe ProbeModel::refine(const Probe& p, int i, int j) const {
    const RulePre& fr = rules_[p.front.rule];
    const RulePre& tr = rules_[p.tail.rule];
    if (i < 0 || i >= fr.n || j < 0 || j >= tr.n)
        throw std::out_of_range("refine: digit out of range");
    int a = p.front.reversed ? fr.n - 1 - i : i;
    int b = p.tail.reversed ? tr.n - 1 - j : j;
    const Agg& front_rem = p.front.reversed ? fr.pre[a] : fr.suf[a];
    const Agg& tail_pre = p.tail.reversed ? tr.suf[b] : tr.pre[b];

    Probe c;
    c.depth = p.depth + 1;
    c.front = {fr.child[a], (fr.rev[a] != 0) != p.front.reversed};
    c.tail = {tr.child[b], (tr.rev[b] != 0) != p.tail.reversed};
    const AffineMap& inv_a = fr.inv[a];
    c.omega = inv_a.compose(p.omega.compose(tr.map[b]));

    ExactScalar tail_scale = p.omega.det_abs();
    c.mid_area = (front_rem.area + p.mid_area + tail_scale * tail_pre.area) / fr.area[a];

    if (track_box_ || track_oct_) {
        AffineMap inv_a_omega = inv_a.compose(p.omega);
        if (track_box_) {
            std::optional<Box> box;
            auto add = [&](const Box& bx) { box = box ? box->merged(bx) : bx; };
            if (front_rem.box) add(front_rem.box->transformed(inv_a));
            if (p.mid_box) add(p.mid_box->transformed(inv_a));
            if (tail_pre.box) add(tail_pre.box->transformed(inv_a_omega));
            c.mid_box = box;
        }
        if (track_oct_) {
            std::optional<Octagon> oct;
            auto add = [&](const Octagon& oc) { oct = oct ? oct->merged(oc) : oc; };
            if (front_rem.oct) add(front_rem.oct->transformed(inv_a));
            if (p.mid_oct) add(p.mid_oct->transformed(inv_a));
            if (tail_pre.oct) add(tail_pre.oct->transformed(inv_a_omega));
            c.mid_oct = oct;
        }
    }
    return c;
}

BoundPair ProbeModel::bounds(const Probe& p) const {
    if (order_->mode == NumericMode::Interval) return bounds_enclosure(p);
    return bounds_exact(p);
}

BoundPair ProbeModel::bounds_exact(const Probe& p) const {
    const ExactScalar& scale = order_->area_scale;
    ExactScalar tail_area = p.omega.det_abs();
    ExactScalar total = ExactScalar(1) + p.mid_area + tail_area;
    bool empty_mid = p.degenerate();

    switch (measure_) {
        case MeasureId::WLinf:
        case MeasureId::WL2:
        case MeasureId::WL1: {
            std::vector<Vec2> tail_verts;
            tail_verts.reserve(unit_verts_.size());
            for (const Vec2& v : unit_verts_) tail_verts.push_back(p.omega.apply(v));
            ExactScalar d2 = max_pair_dist_sq(measure_, unit_verts_, tail_verts) / scale;
            BoundPair r;
            r.lower = d2 / total;
            if (!empty_mid) r.upper = d2 / p.mid_area;
            return r;
        }
        default: {
            if (empty_mid) {
                BoundPair r;
                r.lower = ExactScalar(0);
                return r;  // upper = infinity
            }
            std::vector<Vec2> tail_verts;
            tail_verts.reserve(unit_verts_.size());
            for (const Vec2& v : unit_verts_) tail_verts.push_back(p.omega.apply(v));
            ProbeGeometry g;
            g.front_verts = unit_verts_;
            g.tail_verts = std::move(tail_verts);
            g.mid_area = p.mid_area;
            g.tail_area = tail_area;
            g.mid_box = p.mid_box ? &*p.mid_box : nullptr;
            g.mid_oct = p.mid_oct ? &*p.mid_oct : nullptr;
            return mu_bounds(measure_, g, scale);
        }
    }
}

BoundPair ProbeModel::bounds_enclosure(const Probe& p) const {
    // Interval-mode orders (Gosper): the unit region is fractal. Lower
    // bounds use the curve endpoints (certified points of the region);
    // upper bounds use the certified enclosing circle.
    const ExactScalar& scale = order_->area_scale;
    ExactScalar tail_area = p.omega.det_abs();
    ExactScalar total = ExactScalar(1) + p.mid_area + tail_area;

    std::vector<Vec2> tail_anchors;
    for (const Vec2& v : order_->anchors) tail_anchors.push_back(p.omega.apply(v));
    ExactScalar d2_lo = max_pair_dist_sq(MeasureId::WL2, order_->anchors, tail_anchors);

    BoundPair r;
    r.lower = d2_lo / (scale * total);
    if (p.degenerate()) return r;

    Vec2 cf = *order_->center;
    Vec2 ct = p.omega.apply(cf);
    ExactScalar dc2 = (cf.x - ct.x) * (cf.x - ct.x) + (cf.y - ct.y) * (cf.y - ct.y);
    Rational dc_hi = sqrt_upper(dc2, 48);
    Rational tail_scale_hi = sqrt_upper(tail_area, 48);
    Rational d_hi = dc_hi + order_->radius_hi * (Rational(1) + tail_scale_hi);
    r.upper = ExactScalar(d_hi * d_hi) / (scale * p.mid_area);
    return r;
}

namespace {

struct QueueEntry {
    Probe probe;
    std::optional<ExactScalar> upper;  // nullopt = infinity
    double upper_d;
};

double upper_estimate(const std::optional<ExactScalar>& u) {
    return u ? u->to_double() : std::numeric_limits<double>::infinity();
}

}  // namespace

MeasureInterval compute_worst(const ScanningOrder& order, MeasureId measure,
                              const Rational& gap, const SearchBudget& budget) {
    ProbeModel model(order, measure);
    MeasureInterval result;

    std::deque<QueueEntry> queue;
    std::multiset<double> live_uppers;
    std::unordered_set<std::string> seen;

    ExactScalar lower_bound(0);
    bool have_lower = false;
    double lower_d = 0;
    double gap_d = gap.get_d();

    auto push = [&](Probe&& p) {
        BoundPair b = model.bounds(p);
        if (!have_lower || b.lower.to_double() > lower_d - 1e-9) {
            if (!have_lower || b.lower > lower_bound) {
                lower_bound = b.lower;
                lower_d = lower_bound.to_double();
                have_lower = true;
            }
        }
        QueueEntry e{std::move(p), std::move(b.upper), 0.0};
        e.upper_d = upper_estimate(e.upper);
        live_uppers.insert(e.upper_d);
        queue.push_back(std::move(e));
    };

    for (Probe& p : model.base_probes()) {
        std::string fp = p.fingerprint();
        if (seen.insert(std::move(fp)).second) push(std::move(p));
    }

    long explored = 0;
    result.queue_peak = queue.size();
    bool out_of_budget = false;

    auto exact_queue_max = [&]() -> std::optional<ExactScalar> {
        // nullopt = infinity present
        std::optional<ExactScalar> best;
        for (const QueueEntry& e : queue) {
            if (!e.upper) return std::nullopt;
            if (!best || *e.upper > *best) best = e.upper;
        }
        if (!best) best = lower_bound;  // empty queue: nothing above the lower bound
        return best;
    };

    while (true) {
        if (lower_d > budget.unbounded_cap) {
            result.unbounded_suspected = true;
            break;
        }
        if (queue.empty()) break;
        double up_d = *live_uppers.rbegin();
        if (up_d - lower_d <= gap_d * 0.999) {
            // Promising; certify exactly.
            auto exact_up = exact_queue_max();
            if (exact_up && (*exact_up - lower_bound - ExactScalar(Rational(gap))).sign() <= 0) {
                result.converged = true;
                break;
            }
        }
        if (explored >= budget.max_probes || queue.size() > budget.max_queue) {
            out_of_budget = true;
            break;
        }

        QueueEntry cur = std::move(queue.front());
        queue.pop_front();
        live_uppers.erase(live_uppers.find(cur.upper_d));
        explored++;

        int nf = model.front_branching(cur.probe);
        int nt = model.tail_branching(cur.probe);
        int total_children = nf * nt;
        std::vector<std::optional<std::pair<Probe, BoundPair>>> children(total_children);
#ifdef SFC_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4) if (total_children >= 16)
#endif
        for (int idx = 0; idx < total_children; idx++) {
            Probe child = model.refine(cur.probe, idx / nt, idx % nt);
            BoundPair b = model.bounds(child);
            children[idx] = std::make_pair(std::move(child), std::move(b));
        }
        for (int idx = 0; idx < total_children; idx++) {
            auto& slot = children[idx];
            Probe& child = slot->first;
            BoundPair& b = slot->second;
            // Prune children whose upper bound is certainly below the lower bound.
            if (b.upper) {
                double ud = b.upper->to_double();
                if (ud < lower_d + 1e-9) {
                    if ((*b.upper - lower_bound).sign() < 0) continue;
                }
            }
            std::string fp = child.fingerprint();
            if (!seen.insert(std::move(fp)).second) continue;
            if (b.lower.to_double() > lower_d - 1e-9 && b.lower > lower_bound) {
                lower_bound = b.lower;
                lower_d = lower_bound.to_double();
            }
            QueueEntry e{std::move(child), std::move(b.upper), 0.0};
            e.upper_d = upper_estimate(e.upper);
            live_uppers.insert(e.upper_d);
            queue.push_back(std::move(e));
        }
        if (queue.size() > result.queue_peak) result.queue_peak = queue.size();
    }

    result.lower = lower_bound;
    auto exact_up = exact_queue_max();
    if (exact_up) result.upper = *exact_up;
    result.probes_explored = explored;
    if (out_of_budget) result.converged = false;

    if (order.mode == NumericMode::Interval && measure == MeasureId::WL2) {
        MeasureInterval::Derived inf{MeasureId::WLinf, result.lower, result.upper};
        MeasureInterval::Derived l1{MeasureId::WL1, result.lower * ExactScalar(2),
                                    result.upper ? std::optional<ExactScalar>(*result.upper * ExactScalar(2))
                                                 : std::nullopt};
        result.derived.push_back(std::move(inf));
        result.derived.push_back(std::move(l1));
    }
    return result;
}

ExactScalar grid_oracle(const ScanningOrder& order, MeasureId measure, int depth,
                        size_t cell_budget) {
    if (!is_worst_case(measure))
        throw std::invalid_argument("grid_oracle: worst-case measures only");
    if (order.mode == NumericMode::Interval)
        throw std::domain_error("grid_oracle: unsupported for interval-mode orders");
    auto cells = expand_cells(order, depth, cell_budget);
    size_t n = cells.size();
    const ExactScalar& scale = order.area_scale;

    std::vector<ConvexPolygon> polys;
    std::vector<Vec2> centers;
    std::vector<ExactScalar> areas;
    polys.reserve(n);
    centers.reserve(n);
    Vec2 c0 = order.unit.centroid();
    for (const CellInfo& c : cells) {
        polys.push_back(order.unit.transformed(c.map));
        centers.push_back(c.map.apply(c0));
        areas.push_back(c.rel_area);
    }

    ExactScalar best(0);
    double best_d = 0;
    bool have_best = false;
    auto consider = [&](const ExactScalar& v) {
        double vd = v.to_double();
        if (!have_best || vd > best_d - 1e-12) {
            if (!have_best || v > best) {
                best = v;
                best_d = best.to_double();
                have_best = true;
            }
        }
    };

    bool wl = measure == MeasureId::WLinf || measure == MeasureId::WL2 ||
              measure == MeasureId::WL1;
    for (size_t i = 0; i < n; i++) {
        ExactScalar between(0);  // area of cells [i, j)
        std::optional<Box> box;
        std::optional<Octagon> oct;
        for (size_t j = i + 1; j <= n; j++) {
            between += areas[j - 1];
            if (wl) {
                if (j == n) break;
                ExactScalar d2 =
                    max_pair_dist_sq(measure, {centers[i]}, {centers[j]}) / scale;
                consider(d2 / between);
            } else {
                const ConvexPolygon& poly = polys[j - 1];
                if (needs_box(measure) || measure == MeasureId::WBA || measure == MeasureId::WBP) {
                    Box b = Box::of_points(poly.verts);
                    box = box ? box->merged(b) : b;
                }
                if (needs_octagon(measure)) {
                    Octagon oc = Octagon::of_points(poly.verts);
                    oct = oct ? oct->merged(oc) : oc;
                }
                ExactScalar num;
                switch (measure) {
                    case MeasureId::WBA: num = box->area() / scale; break;
                    case MeasureId::WBP: {
                        ExactScalar p = box->perimeter();
                        num = p * p / (ExactScalar(16) * scale);
                        break;
                    }
                    case MeasureId::WOA: num = oct->area() / scale; break;
                    default: {
                        ExactScalar p = oct->perimeter();
                        num = p * p / (ExactScalar(16) * scale);
                        break;
                    }
                }
                consider(num / between);
            }
        }
    }
    return best;
}

}  // namespace sfc
