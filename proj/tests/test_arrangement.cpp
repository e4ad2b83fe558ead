#include <algorithm>
#include <set>

#include "doctest.h"
#include "divlink/arrangement.hpp"
#include "divlink/cli.hpp"
#include "divlink/error.hpp"
#include "divlink/planar_map.hpp"

using namespace divlink;

namespace {

std::string error_code(const std::string& text) {
    try {
        const StrandSet s = parse_divide(text);
        intersect_strands(s, Exec::Serial);
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

// Independent crossing oracle: every non-adjacent segment pair, solved with
// Cramer's rule on rationals.
std::multiset<std::pair<std::string, std::string>> oracle_crossings(const StrandSet& s) {
    struct G {
        int strand, index;
        QPoint a, b;
    };
    std::vector<G> g;
    for (int k = 0; k < static_cast<int>(s.strands.size()); ++k) {
        const Strand& st = s.strands[k];
        for (std::size_t j = 0; j < st.segment_count(); ++j)
            g.push_back({k, static_cast<int>(j), QPoint(st.seg_start(j)), QPoint(st.seg_end(j))});
    }
    std::multiset<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const Q a1 = g[i].b.x - g[i].a.x, b1 = g[j].a.x - g[j].b.x, c1 = g[j].a.x - g[i].a.x;
            const Q a2 = g[i].b.y - g[i].a.y, b2 = g[j].a.y - g[j].b.y, c2 = g[j].a.y - g[i].a.y;
            const Q det = a1 * b2 - a2 * b1;
            if (det == 0) continue;
            const Q t = (c1 * b2 - c2 * b1) / det, u = (a1 * c2 - a2 * c1) / det;
            if (t <= 0 || t >= 1 || u <= 0 || u >= 1) continue;
            const Q x = g[i].a.x + t * a1, y = g[i].a.y + t * a2;
            out.insert({x.get_str(), y.get_str()});
        }
    return out;
}

} // namespace

TEST_SUITE("arrangement") {
    TEST_CASE("parse and format round trip") {
        const std::string text = "# comment\nboundary 6\nopen (-6,-2) (2,2) (2,4) (-2,4) (-2,-6)  # trailing\n";
        const StrandSet s = parse_divide(text);
        CHECK(s.boundary_half_width == 6);
        REQUIRE(s.strands.size() == 1);
        CHECK(s.strands[0].kind == StrandKind::Open);
        CHECK(s.strands[0].points.size() == 5);
        const StrandSet t = parse_divide(format_divide(s));
        CHECK(format_divide(t) == format_divide(s));
    }

    TEST_CASE("parse errors carry codes and line numbers") {
        CHECK(error_code("open (0,0) (1,1)\n") == "syntax");
        CHECK(error_code("boundary 4\nopen (0,0) (4,0)\n") == "endpoint-off-boundary");
        CHECK(error_code("boundary 4\nopen (-4,0) (9,0)\n") == "outside-disk");
        CHECK(error_code("boundary 4\nclosed (-4,0) (0,1) (1,0)\n") == "closed-touches-boundary");
        CHECK(error_code("boundary 4\nopen (-4,0) (0,1) (0,1) (4,0)\n") == "zero-length");
        try {
            parse_divide("boundary 4\n\nopen (1,)\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }

    TEST_CASE("degenerate inputs are rejected, never perturbed") {
        CHECK(error_code("boundary 4\nopen (-4,0) (4,0)\nopen (-4,-1) (0,0) (4,-1)\n") == "corner-crossing");
        CHECK(error_code("boundary 4\nopen (-4,0) (4,0)\nopen (-2,-4) (-2,0) (2,0) (2,-4)\n") == "corner-crossing");
        CHECK(error_code("boundary 4\nopen (-4,0) (2,0) (0,0) (0,4)\n") == "tangency");
        CHECK(error_code("boundary 4\nopen (-4,-1) (4,-1)\nopen (-4,1) (-1,-1) (4,2)\n") == "corner-crossing");
        CHECK(error_code("boundary 4\nopen (-4,0) (4,0)\nopen (-4,-4) (4,4)\nopen (-4,4) (4,-4)\n") == "triple-point");
        CHECK(error_code("boundary 4\nopen (-4,0) (0,2) (4,0)\n").empty());
    }

    TEST_CASE("x-shape and alpha-divide crossings") {
        const auto x = intersect_strands(parse_divide(corpus_entry("xshape")->text));
        REQUIRE(x.crossings.size() == 1);
        CHECK(x.crossings[0].position == QPoint(Q(0), Q(0)));
        const auto p1 = intersect_strands(parse_divide(corpus_entry("p1")->text));
        REQUIRE(p1.crossings.size() == 1);
        CHECK(p1.crossings[0].position == QPoint(Q(-2), Q(0)));
        CHECK(p1.crossings[0].a.strand == p1.crossings[0].b.strand);
    }

    TEST_CASE("crossings agree with an independent oracle on random divides") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const StrandSet s = random_divide(seed, 1 + static_cast<int>(seed % 5));
            const CrossingSet cs = intersect_strands(s, Exec::Serial);
            std::multiset<std::pair<std::string, std::string>> got;
            for (const auto& c : cs.crossings) got.insert({c.position.x.get_str(), c.position.y.get_str()});
            CHECK(got == oracle_crossings(s));
        }
    }

    TEST_CASE("serial and parallel intersection are identical") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const StrandSet s = random_divide(seed, 6);
            const CrossingSet a = intersect_strands(s, Exec::Serial);
            const CrossingSet b = intersect_strands(s, Exec::Parallel);
            REQUIRE(a.crossings.size() == b.crossings.size());
            for (std::size_t i = 0; i < a.crossings.size(); ++i) {
                CHECK(a.crossings[i].position == b.crossings[i].position);
                CHECK(a.crossings[i].a.segment == b.crossings[i].a.segment);
                CHECK(a.crossings[i].b.t == b.crossings[i].b.t);
            }
        }
    }

    TEST_CASE("planar map Euler formula") {
        for (const auto& e : corpus()) {
            const PlanarMap m = build_planar_map(parse_divide(e.text));
            CHECK_MESSAGE(m.euler_characteristic() == 1 + m.graph_components(), e.name);
        }
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const PlanarMap m = build_planar_map(random_divide(seed, 4));
            CHECK(m.euler_characteristic() == 2);
        }
    }

    TEST_CASE("alpha-divide map: one double point, two endpoints") {
        const PlanarMap m = build_planar_map(parse_divide(corpus_entry("p1")->text));
        int doubles = 0, ends = 0;
        for (const auto& v : m.vertices) {
            doubles += v.kind == VertexKind::DoublePoint;
            ends += v.kind == VertexKind::Endpoint;
        }
        CHECK(doubles == 1);
        CHECK(ends == 2);
        CHECK(m.faces.size() == 4); // three regions and the outside
        for (const auto& v : m.vertices)
            if (v.kind == VertexKind::DoublePoint) CHECK(v.rotation.size() == 4);
    }
}
