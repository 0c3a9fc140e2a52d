#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfc/curve.hpp"
#include "sfc/measures.hpp"

namespace sfc {

// A rule together with a traversal direction.
struct SectionCtx {
    int rule;
    bool reversed;
    bool operator==(const SectionCtx& o) const {
        return rule == o.rule && reversed == o.reversed;
    }
};

// Canonical probe: the front section is the unit region itself ordered by
// `front`; the tail section is omega(unit region) ordered by `tail`; the
// midsection is carried as exact summaries (relative area, hulls).
struct Probe {
    SectionCtx front, tail;
    AffineMap omega;
    ExactScalar mid_area;            // fraction of the unit region
    std::optional<Box> mid_box;      // absent iff midsection empty / not tracked
    std::optional<Octagon> mid_oct;
    int depth = 0;

    bool degenerate() const { return mid_area.is_zero(); }
    std::string fingerprint() const;
};

struct SearchBudget {
    long max_probes = 5'000'000;     // probes expanded
    size_t max_queue = 1'500'000;
    double unbounded_cap = 100.0;    // lower bound beyond which divergence is assumed
};

struct MeasureInterval {
    ExactScalar lower;
    std::optional<ExactScalar> upper;  // nullopt = infinity
    bool converged = false;
    bool unbounded_suspected = false;
    long probes_explored = 0;
    size_t queue_peak = 0;

    // Identities that follow from the computed measure (Gosper reporting).
    struct Derived {
        MeasureId measure;
        ExactScalar lower;
        std::optional<ExactScalar> upper;
    };
    std::vector<Derived> derived;

    double lower_d() const { return lower.to_double(); }
    double upper_d() const { return upper ? upper->to_double() :
                                            std::numeric_limits<double>::infinity(); }
    double width_d() const { return upper_d() - lower_d(); }
};

// Internal per-order tables shared by base_probes/refine/compute_worst.
class ProbeModel {
  public:
    ProbeModel(const ScanningOrder& order, MeasureId measure);

    const ScanningOrder& order() const { return *order_; }
    MeasureId measure() const { return measure_; }
    bool track_box() const { return track_box_; }
    bool track_oct() const { return track_oct_; }

    std::vector<Probe> base_probes() const;
    Probe refine(const Probe& p, int i, int j) const;
    BoundPair bounds(const Probe& p) const;

    int front_branching(const Probe& p) const { return order_->branching(p.front.rule); }
    int tail_branching(const Probe& p) const { return order_->branching(p.tail.rule); }

  private:
    struct Agg {
        ExactScalar area;
        std::optional<Box> box;
        std::optional<Octagon> oct;
    };
    struct RulePre {
        int n = 0;
        std::vector<AffineMap> map, inv;
        std::vector<ExactScalar> area;
        std::vector<int> child;
        std::vector<char> rev;
        std::vector<Agg> pre, suf;  // raw-index strict prefix / suffix
    };

    const ScanningOrder* order_;
    MeasureId measure_;
    bool track_box_ = false, track_oct_ = false;
    std::vector<RulePre> rules_;
    std::vector<int> reachable_;
    std::vector<Vec2> unit_verts_;

    BoundPair bounds_exact(const Probe& p) const;
    BoundPair bounds_enclosure(const Probe& p) const;  // interval-mode WL2
};

// The probe-refinement search: certified interval for a worst-case measure.
MeasureInterval compute_worst(const ScanningOrder& order, MeasureId measure,
                              const Rational& gap, const SearchBudget& budget = {});

// Brute-force lower bound over the depth-k subdivision: max measure ratio
// over all cell pairs, from explicit cell geometry. Independent of the
// probe machinery.
ExactScalar grid_oracle(const ScanningOrder& order, MeasureId measure, int depth,
                        size_t cell_budget = 1100);

}  // namespace sfc
