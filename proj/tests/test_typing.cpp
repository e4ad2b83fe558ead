#include "doctest.h"
#include "divlink/cli.hpp"
#include "divlink/typing.hpp"

using namespace divlink;

namespace {

Divide corpus_divide(const std::string& name) { return make_divide(parse_divide(corpus_entry(name)->text)); }

// The divide after applying (x, y) -> (-y, x) `quarter_turns` times and then
// optionally mirroring in the y axis.
StrandSet transformed(StrandSet s, int quarter_turns, bool mirror) {
    for (Strand& st : s.strands)
        for (IPoint& p : st.points) {
            for (int k = 0; k < quarter_turns; ++k) p = {-p.y, p.x};
            if (mirror) p.x = -p.x;
        }
    return s;
}

} // namespace

TEST_SUITE("typing") {
    TEST_CASE("names and labels") {
        CHECK(type_name(VertexType::T4_2) == "T4_2");
        CHECK(type_label(VertexType::T5_3) == "5-3");
        CHECK(type_label(VertexType::T6_3) == "6-3");
        for (int t = 0; t <= static_cast<int>(VertexType::UNLISTED); ++t) {
            const auto v = static_cast<VertexType>(t);
            CHECK(type_from_name(type_name(v)) == v);
        }
    }

    TEST_CASE("classification table") {
        QuadrantProfile p;
        auto classify = [&](int ext, int ends, Adjacency adj) {
            p.external_count = ext;
            p.endpoint_edge_count = ends;
            p.adjacency = adj;
            return classify_vertex(p);
        };
        CHECK(classify(0, 0, Adjacency::NotApplicable) == VertexType::T1);
        CHECK(classify(1, 0, Adjacency::NotApplicable) == VertexType::T2);
        CHECK(classify(2, 0, Adjacency::Opposite) == VertexType::T3);
        CHECK(classify(2, 0, Adjacency::Adjacent) == VertexType::T4_1);
        CHECK(classify(2, 1, Adjacency::Adjacent) == VertexType::T4_2);
        CHECK(classify(3, 0, Adjacency::NotApplicable) == VertexType::T5_1);
        CHECK(classify(3, 1, Adjacency::NotApplicable) == VertexType::T5_2);
        CHECK(classify(3, 2, Adjacency::NotApplicable) == VertexType::T5_3);
        CHECK(classify(4, 0, Adjacency::NotApplicable) == VertexType::T6_1);
        CHECK(classify(4, 2, Adjacency::NotApplicable) == VertexType::T6_2);
        CHECK(classify(4, 4, Adjacency::NotApplicable) == VertexType::T6_3);
        CHECK(classify(1, 1, Adjacency::NotApplicable) == VertexType::UNLISTED);
        CHECK(classify(4, 3, Adjacency::NotApplicable) == VertexType::UNLISTED);
    }

    TEST_CASE("corpus census matches the goldens") {
        for (const auto& name : corpus_names()) {
            const TypeCensus c = census(corpus_divide(name));
            CHECK_MESSAGE(c == corpus_golden(name)->census, name);
        }
    }

    TEST_CASE("quadrant profile of the alpha-divide vertex") {
        const Divide d = corpus_divide("p1");
        const QuadrantProfile p = quadrant_profile(d, d.map.crossing_vertex[0]);
        CHECK(p.external_count == 3);
        CHECK(p.endpoint_edge_count == 2);
        int ends_in_external = 0;
        for (int q = 0; q < 4; ++q) ends_in_external += p.endpoint_edge[q];
        CHECK(ends_in_external == 2);
    }

    TEST_CASE("census is invariant under rotations and reflections") {
        std::vector<StrandSet> inputs;
        for (const auto& e : corpus()) inputs.push_back(parse_divide(e.text));
        for (std::uint64_t seed = 1; seed <= 25; ++seed) inputs.push_back(random_divide(seed, 4));
        for (const StrandSet& s : inputs) {
            const TypeCensus base = census(make_divide(s));
            for (int turns = 0; turns < 4; ++turns)
                for (bool mirror : {false, true}) CHECK(census(make_divide(transformed(s, turns, mirror))) == base);
        }
    }

    TEST_CASE("hatted census counts every double point as type 1") {
        const Divide p1 = corpus_divide("p1");
        const TypeCensus h = hatted_census(p1);
        CHECK(h.n1 == 1);
        CHECK(h.total() == 1);
        CHECK(hatted_census(corpus_divide("p3")).n1 == 10);
    }

    TEST_CASE("prime admissibility agrees with the vertex types") {
        auto agree = [](const Divide& d) {
            bool listed = true;
            for (VertexType t : vertex_types(d)) listed = listed && prime_type(t);
            return prime_admissible(d).ok == listed;
        };
        for (const auto& name : corpus_names()) CHECK_MESSAGE(agree(corpus_divide(name)), name);
        const PrimeCheck bad = prime_admissible(corpus_divide("nonprime_sum"));
        CHECK_FALSE(bad.ok);
        CHECK(bad.offending_edges.size() == 1);
        for (std::uint64_t seed = 1; seed <= 100; ++seed)
            CHECK_MESSAGE(agree(make_divide(random_divide(seed, 1 + static_cast<int>(seed % 6)))), seed);
    }

    TEST_CASE("Hopf case") {
        CHECK(hopf_case(census(corpus_divide("xshape"))));
        CHECK_FALSE(hopf_case(census(corpus_divide("p1"))));
    }
}
