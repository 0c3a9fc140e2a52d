#include <map>
#include <sstream>
#include <stdexcept>

#include "sfc/curve.hpp"

namespace sfc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw std::runtime_error(".sfc line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

ScanningOrder parse_curve_file(const std::string& text) {
    ScanningOrder order;
    struct PendingStep {
        AffineMap map;
        std::string child;
        bool reversed;
    };
    struct PendingRule {
        std::string name;
        int n = 0;
        std::vector<PendingStep> steps;
    };
    std::vector<PendingRule> pending;
    std::vector<Vec2> unit_verts;
    bool have_curve = false;

    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        line_no++;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "curve") {
            if (tok.size() != 2) fail(line_no, "expected: curve NAME");
            order.name = tok[1];
            have_curve = true;
        } else if (kw == "unit") {
            if (tok.size() < 7 || (tok.size() - 1) % 2 != 0)
                fail(line_no, "expected: unit x0 y0 x1 y1 ... (>= 3 vertices)");
            for (size_t i = 1; i + 1 < tok.size(); i += 2) {
                try {
                    unit_verts.push_back({parse_scalar(tok[i]), parse_scalar(tok[i + 1])});
                } catch (const ParseError& e) {
                    fail(line_no, std::string("bad scalar: ") + e.what());
                }
            }
        } else if (kw == "rule") {
            if (tok.size() != 3 || tok[2].rfind("n=", 0) != 0)
                fail(line_no, "expected: rule NAME n=K");
            PendingRule r;
            r.name = tok[1];
            r.n = std::stoi(tok[2].substr(2));
            if (r.n < 1) fail(line_no, "rule must have at least one step");
            pending.push_back(std::move(r));
        } else if (kw == "step") {
            if (pending.empty()) fail(line_no, "step before any rule");
            // step IDX: m a b c d t tx ty child NAME rev 0|1
            if (tok.size() != 14 || tok[2] != "m" || tok[7] != "t" ||
                tok[10] != "child" || tok[12] != "rev")
                fail(line_no, "expected: step IDX: m a b c d t tx ty child NAME rev 0|1");
            PendingStep s;
            try {
                s.map.m00 = parse_scalar(tok[3]);
                s.map.m01 = parse_scalar(tok[4]);
                s.map.m10 = parse_scalar(tok[5]);
                s.map.m11 = parse_scalar(tok[6]);
                s.map.tx = parse_scalar(tok[8]);
                s.map.ty = parse_scalar(tok[9]);
            } catch (const ParseError& e) {
                fail(line_no, std::string("bad scalar: ") + e.what());
            }
            s.child = tok[11];
            if (tok[13] != "0" && tok[13] != "1") fail(line_no, "rev must be 0 or 1");
            s.reversed = tok[13] == "1";
            size_t idx = pending.back().steps.size();
            if (tok[1] != std::to_string(idx) + ":")
                fail(line_no, "step index out of sequence, expected " + std::to_string(idx) + ":");
            pending.back().steps.push_back(std::move(s));
        } else {
            fail(line_no, "unknown keyword: " + kw);
        }
    }

    if (!have_curve) throw std::runtime_error(".sfc: missing curve line");
    if (unit_verts.size() < 3) throw std::runtime_error(".sfc: missing or degenerate unit region");
    if (pending.empty()) throw std::runtime_error(".sfc: no rules");

    std::map<std::string, int> index;
    for (size_t i = 0; i < pending.size(); i++) {
        if (index.count(pending[i].name))
            throw std::runtime_error(".sfc: duplicate rule " + pending[i].name);
        index[pending[i].name] = static_cast<int>(i);
    }
    for (const PendingRule& r : pending) {
        if (static_cast<int>(r.steps.size()) != r.n)
            throw std::runtime_error(".sfc: rule " + r.name + " declared n=" +
                                     std::to_string(r.n) + " but has " +
                                     std::to_string(r.steps.size()) + " steps");
        Rule rule;
        rule.name = r.name;
        for (const PendingStep& s : r.steps) {
            auto it = index.find(s.child);
            if (it == index.end())
                throw std::runtime_error(".sfc: rule " + r.name + " references unknown child " + s.child);
            rule.steps.push_back({s.map, it->second, s.reversed});
        }
        order.rules.push_back(std::move(rule));
    }
    order.unit = ConvexPolygon(std::move(unit_verts));
    if (order.unit.area().sign() <= 0)
        throw std::runtime_error(".sfc: unit region must be counterclockwise with positive area");
    order.area_scale = order.unit.area();
    order.finalize();

    TilingReport report = validate(order);
    if (!report.pass) {
        std::ostringstream os;
        os << ".sfc: tiling validation failed:";
        for (const RuleReport& rr : report.rules) {
            if (!rr.pass)
                os << " rule " << rr.rule << " area_sum=" << rr.area_sum.str()
                   << " max_overlap=" << rr.max_overlap.str() << ";";
        }
        throw std::runtime_error(os.str());
    }
    return order;
}

std::string curve_file_grammar_help() {
    return
        "Curve file format (.sfc), line oriented, '#' starts a comment:\n"
        "  curve NAME\n"
        "  unit x0 y0 x1 y1 ...          # convex CCW polygon, scalars without spaces\n"
        "  rule NAME n=K                 # first rule is the root\n"
        "  step IDX: m a b c d t tx ty child NAME rev 0|1\n"
        "Scalars use the exact grammar, e.g. 1/3, -1/2*r2, 1/3*r3+1 (r2, r3, r6).\n"
        "The step map is p -> [a b; c d] p + (tx, ty); determinant magnitudes\n"
        "of the steps of each rule must sum to the unit region area.\n";
}

}  // namespace sfc
