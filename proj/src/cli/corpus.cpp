#include <cmath>
#include <numbers>

#include "divlink/cli.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

const char* const kXShape = R"(# Two chords crossing once: the Hopf link.
boundary 2
open (-2,-2) (2,2)
open (-2,2) (2,-2)
)";

const char* const kP0 = R"(# Figure-eight curve with one double point; both lobes are internal.
boundary 5
closed (-3,1) (3,-1) (3,1) (-3,-1)
)";

const char* const kP1 = R"(# Alpha-divide: one interval with a loop around a 1-gon.
boundary 6
open (-6,-2) (2,2) (2,4) (-2,4) (-2,-6)
)";

const char* const kP2 = R"(# Two overlapping circles.
boundary 5
closed (-3,-2) (1,-2) (1,2) (-3,2)
closed (-1,-1) (3,-1) (3,3) (-1,3)
)";

const char* const kP3 = R"(# Five intervals, ten double points.
boundary 16
open (-16,-5) (-12,11) (16,-7)
open (-4,-16) (8,15) (-16,3)
open (-16,-6) (-6,-1) (-5,-3) (12,-16)
open (16,10) (12,8) (-16,12)
open (16,11) (-2,9) (-6,-16)
)";

const char* const kNonprimeSum = R"(# Two alpha-divide loops joined by a corridor edge with external
# regions on both sides.
boundary 12
open (-12,-4) (-4,0) (-4,3) (-8,3) (-8,-6) (8,-6) (8,0) (5,0) (5,-12)
)";

const char* const kChain2 = R"(boundary 6
open (-6,-2) (0,2) (6,-2)
open (-6,2) (0,-2) (6,2)
)";

IPoint scaled_to_boundary(const IPoint& p, std::int64_t n) {
    const double m = static_cast<double>(std::max(std::abs(p.x), std::abs(p.y)));
    return {std::llround(static_cast<double>(p.x) * n / m), std::llround(static_cast<double>(p.y) * n / m)};
}

bool parse_chain_name(const std::string& name, int& n) {
    if (name.rfind("chain", 0) != 0 || name.size() <= 5) return false;
    const std::string digits = name.substr(5);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) return false;
    n = std::stoi(digits);
    return n >= 1;
}

} // namespace

StrandSet chain_divide(int n) {
    if (n < 1) throw Error("bad-argument", "chain length must be at least 1");
    if (n == 1) return parse_divide(kP1);
    if (n == 2) return parse_divide(kChain2);

    // Vertices of a convex n-gon on a grid coarse enough that every side has a
    // short lattice stub beyond each end.
    const std::int64_t r = static_cast<std::int64_t>(n) * n + 4;
    const std::int64_t grid = 4;
    std::vector<IPoint> v(n);
    for (int k = 0; k < n; ++k) {
        const double phi = 2 * std::numbers::pi * k / n;
        v[k] = {grid * std::llround(r * std::cos(phi)), grid * std::llround(r * std::sin(phi))};
    }
    StrandSet s;
    s.boundary_half_width = 2 * grid * r;
    for (int k = 0; k < n; ++k) {
        // Strand k runs along the side from vertex k-1 to vertex k, crossing
        // strand k-1 at the first and strand k+1 at the second.
        const IPoint& from = v[(k + n - 1) % n];
        const IPoint& to = v[k];
        const IVec step = primitive(to - from);
        const IPoint a{from.x - step.x, from.y - step.y};
        const IPoint b{to.x + step.x, to.y + step.y};
        Strand st;
        st.kind = StrandKind::Open;
        st.points = {scaled_to_boundary(a, s.boundary_half_width), a, b, scaled_to_boundary(b, s.boundary_half_width)};
        s.strands.push_back(std::move(st));
    }
    validate_strands(s);
    return s;
}

std::vector<CorpusEntry> corpus() {
    return {{"xshape", kXShape},     {"p0", kP0},
            {"p1", kP1},             {"p2", kP2},
            {"p3", kP3},             {"nonprime_sum", kNonprimeSum},
            {"chain5", format_divide(chain_divide(5))}, {"chain7", format_divide(chain_divide(7))}};
}

std::vector<std::string> corpus_names() {
    std::vector<std::string> out;
    for (const auto& e : corpus()) out.push_back(e.name);
    return out;
}

std::optional<CorpusEntry> corpus_entry(const std::string& name) {
    int n = 0;
    if (parse_chain_name(name, n)) return CorpusEntry{name, format_divide(chain_divide(n))};
    for (auto& e : corpus())
        if (e.name == name) return e;
    return std::nullopt;
}

std::optional<CorpusGolden> corpus_golden(const std::string& name) {
    CorpusGolden g;
    int n = 0;
    if (parse_chain_name(name, n)) {
        g.census.n5 = n;
        g.regions = 2 * n + 1;
        g.internal_regions = 1;
        return g;
    }
    if (name == "xshape") {
        g.census.others[VertexType::T6_3] = 1;
        g.regions = 4;
    } else if (name == "p0") {
        g.census.n3 = 1;
        g.regions = 3;
        g.internal_regions = 2;
    } else if (name == "p1") {
        g.census.n5 = 1;
        g.regions = 3;
        g.internal_regions = 1;
    } else if (name == "p2") {
        g.census.n2 = 2;
        g.regions = 4;
        g.internal_regions = 3;
    } else if (name == "p3") {
        g.census.n1 = 1;
        g.census.n2 = 1;
        g.census.n3 = 1;
        g.census.n4 = 4;
        g.census.n5 = 3;
        g.regions = 16;
        g.internal_regions = 6;
    } else if (name == "nonprime_sum") {
        g.census.others[VertexType::T5_2] = 2;
        g.regions = 4;
        g.internal_regions = 2;
    } else {
        return std::nullopt;
    }
    return g;
}

} // namespace divlink
