#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfc/geometry.hpp"
#include "sfc/measures.hpp"

namespace sfc {

// One subdivision step: where the child goes, which rule orders it, and
// whether the child's internal order runs backwards.
struct Step {
    AffineMap map;   // unit region -> child region (reversal flag unused here)
    int child;       // rule index
    bool reversed;
};

struct Rule {
    std::string name;
    std::vector<Step> steps;
};

enum class NumericMode { Exact, Interval };

// A scanning order: recursive subdivision rules over a convex unit region.
// Geometry lives in a frame whose absolute area is area_scale; all area
// bookkeeping is relative (fractions of the whole region), so determinant
// magnitudes of rule steps sum to 1 within each rule. area_scale is 1 for
// every builtin except balanced GP, which is kept in a sqrt(3)-stretched
// frame so that all coordinates stay inside Q[sqrt2, sqrt3].
struct ScanningOrder {
    std::string name;
    std::vector<Rule> rules;
    int root = 0;
    ConvexPolygon unit;
    ExactScalar area_scale = ExactScalar(1);
    NumericMode mode = NumericMode::Exact;

    // Derived capabilities (computed by finalize()).
    bool axis_aligned = false;    // box summaries exact under every step map
    bool uniform_axis = false;    // octagon summaries exact as well

    // For interval-mode orders (fractal region, no exact polygon): a point
    // the region is star-shaped around plus a certified radius bound, and
    // anchor points known to lie in the region (the curve endpoints).
    std::optional<Vec2> center;
    Rational radius_hi = 0;
    std::vector<Vec2> anchors;

    int branching(int rule) const { return static_cast<int>(rules[rule].steps.size()); }
    const Rule& rule(int i) const { return rules[i]; }

    void finalize();  // computes capabilities, checks rule references

    bool supports(MeasureId id) const;
};

struct CellAddress {
    std::vector<int> digits;
};

// --- catalog ----------------------------------------------------------------

// gp, balanced-gp, hilbert, z-order, sierpinski-knopp, gosper, r-order,
// coil, meurthe, luxburg2, serpentine-011010110, beta-omega, ar2w2.
ScanningOrder builtin(const std::string& name);
std::vector<std::string> builtin_names();

// One of Wunderlich's 3x3 serpentine orders. Digit k steers the subcell at
// serpentine position k: 0 keeps the plain reflected copy (all-zero gives
// GP order), 1 composes the diagonal flip (all-one gives coil order).
ScanningOrder serpentine(const std::string& code);

// Canonical representative of a serpentine code modulo traversal reversal
// (which maps a code to its reverse): the lexicographically larger of the
// two, matching the conventional names for the named orders.
std::string serpentine_canonical(const std::string& code);

// --- validation -------------------------------------------------------------

struct RuleReport {
    std::string rule;
    bool area_ok = false;
    ExactScalar area_sum;      // relative, should be 1
    ExactScalar max_overlap;   // exact pairwise intersection area
    bool pass = false;
};

struct TilingReport {
    std::vector<RuleReport> rules;
    bool pass = false;
    std::string note;
};

TilingReport validate(const ScanningOrder& order);
// Exact check on the full depth-d subdivision of the unit region.
TilingReport validate_depth(const ScanningOrder& order, int depth);

// --- cells, comparison, polylines -------------------------------------------

ConvexPolygon cell_region(const ScanningOrder& order, const CellAddress& addr);

enum class Ordering { Before, After, Undecided };

// Recursive comparison of two points with the exact boundary convention
// (boundaries belong to the region above / to the right, in the global
// frame). Returns Undecided when the points still share a cell at max_depth.
Ordering compare(const ScanningOrder& order, const Vec2& p, const Vec2& q, int max_depth);

// Centroids of all depth-level cells in traversal order.
std::vector<Vec2> polyline(const ScanningOrder& order, int depth,
                           size_t budget = size_t(1) << 20);

// Depth-k cells in traversal order (shared helper for oracles and tests).
struct CellInfo {
    AffineMap map;        // composed map, unit -> cell
    ExactScalar rel_area; // fraction of the unit region
    int rule;             // rule ordering the cell's interior
    bool reversed;
};
std::vector<CellInfo> expand_cells(const ScanningOrder& order, int depth,
                                   size_t budget = size_t(1) << 20);

// --- curve files ------------------------------------------------------------

// Parses the .sfc format and validates the tiling; throws on failure.
ScanningOrder parse_curve_file(const std::string& text);
std::string curve_file_grammar_help();

}  // namespace sfc
