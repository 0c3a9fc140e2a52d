#include <algorithm>
#include <stdexcept>

#include "curve_data.hpp"
#include "sfc/curve.hpp"

namespace sfc {

ScanningOrder gosper_order();  // gosper.cpp

namespace {

ExactScalar frac(long n, long d) { return ExactScalar(Rational(n, d)); }

ConvexPolygon unit_square() {
    return ConvexPolygon({{ExactScalar(0), ExactScalar(0)},
                          {ExactScalar(1), ExactScalar(0)},
                          {ExactScalar(1), ExactScalar(1)},
                          {ExactScalar(0), ExactScalar(1)}});
}

// The eight symmetries of the unit square.
enum Sym { E, T, MX, MY, R90, R180, R270, AT };

AffineMap sym_map(Sym s) {
    auto mk = [](long a, long b, long c, long d, long tx, long ty) {
        AffineMap m;
        m.m00 = ExactScalar(a); m.m01 = ExactScalar(b);
        m.m10 = ExactScalar(c); m.m11 = ExactScalar(d);
        m.tx = ExactScalar(tx); m.ty = ExactScalar(ty);
        return m;
    };
    switch (s) {
        case E:    return mk(1, 0, 0, 1, 0, 0);
        case T:    return mk(0, 1, 1, 0, 0, 0);
        case MX:   return mk(-1, 0, 0, 1, 1, 0);
        case MY:   return mk(1, 0, 0, -1, 0, 1);
        case R90:  return mk(0, -1, 1, 0, 1, 0);
        case R180: return mk(-1, 0, 0, -1, 1, 1);
        case R270: return mk(0, 1, -1, 0, 0, 1);
        case AT:   return mk(0, -1, -1, 0, 1, 1);
    }
    throw std::logic_error("sym_map");
}

// Place a square symmetry into the grid cell (col,row) of a g x g grid.
AffineMap place(Sym s, int col, int row, int g) {
    AffineMap m = sym_map(s);
    ExactScalar inv = frac(1, g);
    m.m00 *= inv; m.m01 *= inv; m.m10 *= inv; m.m11 *= inv;
    m.tx = m.tx * inv + frac(col, g);
    m.ty = m.ty * inv + frac(row, g);
    return m;
}

ScanningOrder one_rule_square(const std::string& name, const std::vector<Step>& steps) {
    ScanningOrder o;
    o.name = name;
    o.rules.push_back({name, steps});
    o.unit = unit_square();
    o.finalize();
    return o;
}

ScanningOrder hilbert_order() {
    const Sym syms[4] = {T, E, E, AT};
    const int cells[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<Step> steps;
    for (int k = 0; k < 4; k++)
        steps.push_back({place(syms[k], cells[k][0], cells[k][1], 2), 0, false});
    return one_rule_square("hilbert", steps);
}

ScanningOrder z_order() {
    const int cells[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<Step> steps;
    for (int k = 0; k < 4; k++)
        steps.push_back({place(E, cells[k][0], cells[k][1], 2), 0, false});
    return one_rule_square("z-order", steps);
}

ScanningOrder r_order() {
    const Sym syms[9] = {E, T, T, R180, E, E, E, AT, AT};
    const int cells[9][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 2},
                             {1, 2}, {2, 2}, {2, 1}, {2, 0}};
    std::vector<Step> steps;
    for (int k = 0; k < 9; k++)
        steps.push_back({place(syms[k], cells[k][0], cells[k][1], 3), 0, false});
    return one_rule_square("r-order", steps);
}

// Serpentine grid geometry: position k sits in column k/3; columns alternate
// upward and downward.
void serpentine_cell(int k, int& col, int& row) {
    col = k / 3;
    int r = k % 3;
    row = (col % 2 == 0) ? r : 2 - r;
}

// Base orientations of GP order (all plain reflections).
Sym gp_sym(int k) {
    static const Sym syms[9] = {E, MX, E, MY, R180, MY, E, MX, E};
    return syms[k];
}

// The diagonal flip composed with a base orientation.
Sym flip_sym(Sym s) {
    switch (s) {
        case E: return T;
        case MX: return R90;
        case MY: return R270;
        case R180: return AT;
        default: throw std::logic_error("flip_sym");
    }
}

ScanningOrder sierpinski_order() {
    // One-level expansion of the triangle-halving rule: four children with
    // rotations by multiples of pi/2 only.
    ScanningOrder o;
    o.name = "sierpinski-knopp";
    auto mk = [](long a_n, long a_d, long b_n, long b_d, long c_n, long c_d,
                 long d_n, long d_d, long tx, long ty) {
        AffineMap m;
        m.m00 = ExactScalar(Rational(a_n, a_d));
        m.m01 = ExactScalar(Rational(b_n, b_d));
        m.m10 = ExactScalar(Rational(c_n, c_d));
        m.m11 = ExactScalar(Rational(d_n, d_d));
        m.tx = ExactScalar(tx);
        m.ty = ExactScalar(ty);
        return m;
    };
    std::vector<Step> steps;
    steps.push_back({mk(1, 2, 0, 1, 0, 1, 1, 2, 0, 0), 0, false});
    steps.push_back({mk(0, 1, -1, 2, 1, 2, 0, 1, 1, 0), 0, false});
    steps.push_back({mk(0, 1, 1, 2, -1, 2, 0, 1, 1, 1), 0, false});
    steps.push_back({mk(1, 2, 0, 1, 0, 1, 1, 2, 1, 0), 0, false});
    o.rules.push_back({"sierpinski-knopp", steps});
    o.unit = ConvexPolygon({{ExactScalar(0), ExactScalar(0)},
                            {ExactScalar(2), ExactScalar(0)},
                            {ExactScalar(1), ExactScalar(1)}});
    o.finalize();
    return o;
}

ScanningOrder balanced_gp_order() {
    // GP with the unit square stretched horizontally by sqrt(3). The frame
    // keeps the stretched rectangle (area sqrt 3) so every coordinate stays
    // in the field; measure evaluators divide by area_scale.
    ScanningOrder o;
    o.name = "balanced-gp";
    ExactScalar r3 = ExactScalar::sqrt3();
    std::vector<Step> steps;
    for (int k = 0; k < 9; k++) {
        int col, row;
        serpentine_cell(k, col, row);
        AffineMap m = sym_map(gp_sym(k));  // diagonal linear part
        m.tx *= r3;                        // act on the stretched rectangle
        ExactScalar inv = frac(1, 3);
        m.m00 *= inv; m.m11 *= inv;
        m.tx = m.tx * inv + r3 * frac(col, 3);
        m.ty = m.ty * inv + frac(row, 3);
        steps.push_back({m, 0, false});
    }
    o.rules.push_back({"balanced-gp", steps});
    o.unit = ConvexPolygon({{ExactScalar(0), ExactScalar(0)},
                            {r3, ExactScalar(0)},
                            {r3, ExactScalar(1)},
                            {ExactScalar(0), ExactScalar(1)}});
    o.area_scale = r3;
    o.finalize();
    return o;
}

}  // namespace

ScanningOrder serpentine(const std::string& code) {
    if (code.size() != 9) throw std::invalid_argument("serpentine code must have 9 digits");
    std::vector<Step> steps;
    for (int k = 0; k < 9; k++) {
        char ch = code[k];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("serpentine code digits must be 0 or 1");
        int col, row;
        serpentine_cell(k, col, row);
        Sym s = ch == '0' ? gp_sym(k) : flip_sym(gp_sym(k));
        steps.push_back({place(s, col, row, 3), 0, false});
    }
    return one_rule_square("serpentine-" + code, steps);
}

std::string serpentine_canonical(const std::string& code) {
    std::string rev(code.rbegin(), code.rend());
    return std::max(code, rev);
}

std::vector<std::string> builtin_names() {
    return {"gp",      "balanced-gp", "hilbert",   "z-order", "sierpinski-knopp",
            "gosper",  "r-order",     "coil",      "meurthe", "luxburg2",
            "serpentine-011010110",   "beta-omega", "ar2w2"};
}

ScanningOrder builtin(const std::string& name) {
    if (name == "hilbert") return hilbert_order();
    if (name == "z-order") return z_order();
    if (name == "r-order") return r_order();
    if (name == "sierpinski-knopp") return sierpinski_order();
    if (name == "balanced-gp") return balanced_gp_order();
    if (name == "gosper") return gosper_order();
    if (name == "gp") {
        ScanningOrder o = serpentine("000000000");
        o.name = "gp";
        return o;
    }
    if (name == "coil") {
        ScanningOrder o = serpentine("111111111");
        o.name = "coil";
        return o;
    }
    if (name == "meurthe") {
        ScanningOrder o = serpentine("110110110");
        o.name = "meurthe";
        return o;
    }
    if (name == "luxburg2") {
        ScanningOrder o = serpentine("101010101");
        o.name = "luxburg2";
        return o;
    }
    if (name == "serpentine-011010110") return serpentine("011010110");
    if (name == "beta-omega") {
        ScanningOrder o = parse_curve_file(curve_data::kBetaOmega);
        o.name = "beta-omega";
        return o;
    }
    if (name == "ar2w2") {
        ScanningOrder o = parse_curve_file(curve_data::kAr2w2);
        o.name = "ar2w2";
        return o;
    }
    throw std::invalid_argument("unknown curve: " + name);
}

}  // namespace sfc
