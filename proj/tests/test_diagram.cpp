#include <cstdlib>
#include <map>

#include "doctest.h"
#include "divlink/cli.hpp"
#include "divlink/diagram.hpp"

using namespace divlink;

namespace {

StrandSet corpus_strands(const std::string& name) { return parse_divide(corpus_entry(name)->text); }

int expected_components(const StrandSet& s) {
    int n = 0;
    for (const Strand& st : s.strands) n += st.kind == StrandKind::Open ? 1 : 2;
    return n;
}

// Every arc label of a PD code appears in exactly two crossing slots.
bool arcs_paired(const PDCode& pd) {
    std::map<int, int> uses;
    for (const auto& c : pd.crossings)
        for (int a : c.arcs) ++uses[a];
    for (const auto& [arc, n] : uses)
        if (n != 2) return false;
    return true;
}

bool symmetric_zero_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i][i] != 0) return false;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != m[j][i]) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("diagram") {
    TEST_CASE("component counts on the corpus") {
        for (const auto& e : corpus()) {
            const StrandSet s = parse_divide(e.text);
            const Lift3D l = lift(s);
            CHECK_MESSAGE(static_cast<int>(l.components.size()) == expected_components(s), e.name);
            CHECK_MESSAGE(lift_is_invertible(l), e.name);
            const PDCode pd = project_pd(l);
            CHECK(pd.component_count == expected_components(s));
            CHECK_MESSAGE(arcs_paired(pd), e.name);
        }
    }

    TEST_CASE("a single chord lifts to an unknot without crossings") {
        const PDCode pd = project_pd(lift(parse_divide("boundary 3\nopen (-3,0) (3,1)\n")));
        CHECK(pd.component_count == 1);
        CHECK(pd.crossings.empty());
    }

    TEST_CASE("x-shape gives the Hopf link") {
        const Lift3D l = lift(corpus_strands("xshape"));
        const IntMatrix lk = linking_matrix(project_pd(l));
        REQUIRE(lk.size() == 2);
        CHECK(std::abs(lk[0][1]) == 1);
        CHECK(equal_up_to_sign(lk, gauss_linking_oracle(l)));
    }

    TEST_CASE("disjoint chords are unlinked") {
        const Lift3D l = lift(parse_divide("boundary 4\nopen (-4,-1) (4,-2)\nopen (-4,2) (4,1)\n"));
        const IntMatrix lk = linking_matrix(project_pd(l));
        CHECK(lk == IntMatrix{{0, 0}, {0, 0}});
        CHECK(gauss_linking_oracle(l) == IntMatrix{{0, 0}, {0, 0}});
    }

    TEST_CASE("chain family gives a cyclic chain of links") {
        for (int n : {3, 4, 5, 7}) {
            const Lift3D l = lift(chain_divide(n));
            REQUIRE(static_cast<int>(l.components.size()) == n);
            const IntMatrix lk = linking_matrix(project_pd(l));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const int si = l.components[i].strand, sj = l.components[j].strand;
                    const int gap = std::abs(si - sj);
                    const bool adjacent = gap == 1 || gap == n - 1;
                    CHECK(std::abs(lk[i][j]) == (adjacent ? 1 : 0));
                }
        }
    }

    TEST_CASE("PD linking numbers agree with the Gauss integral oracle") {
        std::vector<StrandSet> inputs;
        for (const auto& e : corpus()) inputs.push_back(parse_divide(e.text));
        for (std::uint64_t seed = 1; seed <= 12; ++seed) inputs.push_back(random_divide(seed, 2 + static_cast<int>(seed % 3)));
        for (const StrandSet& s : inputs) {
            const Lift3D l = lift(s);
            if (l.components.size() < 2) continue;
            const IntMatrix lk = linking_matrix(project_pd(l));
            CHECK(symmetric_zero_diagonal(lk));
            CHECK(equal_up_to_sign(lk, gauss_linking_oracle(l)));
        }
    }

    TEST_CASE("serial and parallel Gauss oracle agree") {
        for (const char* name : {"p0", "p2", "chain5"}) {
            const Lift3D l = lift(corpus_strands(name));
            CHECK(gauss_linking_oracle(l, Exec::Serial) == gauss_linking_oracle(l, Exec::Parallel));
        }
    }

    TEST_CASE("PD text format") {
        const PDCode pd = project_pd(lift(corpus_strands("xshape")));
        const std::string text = pd_text(pd);
        CHECK(text.rfind("PD[X(", 0) == 0);
        CHECK(text.back() == ']');
        CHECK(gauss_code_text(pd).rfind("Gauss[{", 0) == 0);
        for (const auto& c : pd.crossings) CHECK(std::abs(c.sign) == 1);
    }

    TEST_CASE("diagonalization keeps the divide map") {
        CHECK(is_diagonal(corpus_strands("xshape")));
        CHECK(diagonalize(corpus_strands("xshape")).scale == 1);
        CHECK_FALSE(is_diagonal(corpus_strands("p1")));
        for (const char* name : {"p0", "p1", "p2", "p3", "chain5"}) {
            const StrandSet s = corpus_strands(name);
            const DiagonalDivide d = diagonalize(s);
            CHECK_MESSAGE(is_diagonal(d.strands), name);
            CHECK_MESSAGE(same_divide_map(s, d.strands, d.scale), name);
            CHECK(static_cast<int>(lift(d).components.size()) == expected_components(s));
        }
    }

    TEST_CASE("the diagonal form has the same link") {
        for (const char* name : {"p0", "p1", "p2", "p3"}) {
            const StrandSet s = corpus_strands(name);
            const Lift3D l = lift(diagonalize(s));
            const PDCode pd = project_pd(l);
            CHECK(arcs_paired(pd));
            if (l.components.size() >= 2)
                CHECK_MESSAGE(equal_up_to_sign(linking_matrix(pd), linking_matrix(project_pd(lift(s)))), name);
        }
    }

    TEST_CASE("axis-aligned chord becomes a staircase") {
        const StrandSet s = parse_divide("boundary 4\nopen (-4,0) (4,0)\n");
        const DiagonalDivide d = diagonalize(s);
        CHECK(is_diagonal(d.strands));
        REQUIRE(d.strands.strands.size() == 1);
        const auto& pts = d.strands.strands[0].points;
        CHECK(pts.front() == IPoint{-4 * d.scale, 0});
        CHECK(pts.back() == IPoint{4 * d.scale, 0});
        CHECK(pts.size() > 2);
    }

    TEST_CASE("a different map is detected") {
        const StrandSet a = parse_divide("boundary 4\nopen (-4,-1) (4,-2)\nopen (-4,2) (4,1)\n");
        const StrandSet b = parse_divide("boundary 4\nopen (-4,-1) (4,1)\nopen (-4,2) (4,-2)\n");
        CHECK_FALSE(same_divide_map(a, b, 1));
        CHECK(same_divide_map(a, a, 1));
    }
}
