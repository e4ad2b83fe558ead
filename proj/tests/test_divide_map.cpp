#include "doctest.h"
#include "divlink/cli.hpp"
#include "divlink/divide_map.hpp"
#include "divlink/error.hpp"

using namespace divlink;

namespace {
Divide corpus_divide(const std::string& name) { return make_divide(parse_divide(corpus_entry(name)->text)); }
} // namespace

TEST_SUITE("divide_map") {
    TEST_CASE("regions of the corpus match the goldens") {
        for (const auto& name : corpus_names()) {
            const Divide d = corpus_divide(name);
            const auto g = corpus_golden(name);
            REQUIRE(g);
            CHECK_MESSAGE(static_cast<int>(d.regions.size()) == g->regions, name);
            CHECK_MESSAGE(d.internal_region_count() == g->internal_regions, name);
        }
    }

    TEST_CASE("strand census and link components") {
        const Divide p1 = corpus_divide("p1");
        CHECK(p1.strands == StrandCensus{1, 0});
        CHECK(link_component_count(p1) == 1);
        const Divide p2 = corpus_divide("p2");
        CHECK(p2.strands == StrandCensus{0, 2});
        CHECK(link_component_count(p2) == 4);
        CHECK(link_component_count(corpus_divide("xshape")) == 2);
    }

    TEST_CASE("cusp count is components plus internal regions") {
        CHECK(cusp_count(corpus_divide("p1")) == 2);
        for (int n : {1, 2, 5, 9}) CHECK(cusp_count(make_divide(chain_divide(n))) == n + 1);
        CHECK(cusp_count(corpus_divide("p2")) == 7);
    }

    TEST_CASE("connectivity") {
        CHECK(corpus_divide("p3").connected);
        const Divide apart = make_divide(parse_divide("boundary 4\nopen (-4,-1) (4,-1)\nopen (-4,1) (4,1)\n"));
        CHECK_FALSE(apart.connected);
        CHECK_THROWS_AS(cusp_count(apart), Error);
    }

    TEST_CASE("crossing-free circle gets an anchor vertex") {
        const Divide d = make_divide(parse_divide("boundary 5\nclosed (-1,-1) (1,-1) (1,1) (-1,1)\n"));
        CHECK(d.regions.size() == 2);
        CHECK(d.internal_region_count() == 1);
        CHECK(d.map.euler_characteristic() == 1 + d.map.graph_components());
    }
}
