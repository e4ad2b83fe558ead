#include <sstream>

#include "doctest.h"
#include "divlink/blocks.hpp"
#include "divlink/cli.hpp"
#include "divlink/error.hpp"

using namespace divlink;

namespace {

const VertexType kBlockTypes[] = {VertexType::T1, VertexType::T2, VertexType::T3, VertexType::T4_2, VertexType::T5_3};

PolyhedralComplex complex_of(const StrandSet& s) {
    const Divide d = make_divide(s);
    return assemble_complex(d, vertex_types(d));
}

PolyhedralComplex complex_of(const std::string& name) { return complex_of(parse_divide(corpus_entry(name)->text)); }

// Re-pairs two face gluings A-B and C-D as A-D and C-B; `choice` selects the
// pair among all pairs of gluings with matching face sizes.
bool swap_two_gluings(CellComplex& c, std::size_t choice) {
    std::vector<FaceGluing> forward;
    for (const auto& [f, g] : c.glue)
        if (g.from < g.to) forward.push_back(g);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < forward.size(); ++i)
        for (std::size_t j = i + 1; j < forward.size(); ++j)
            if (forward[i].vertex_map.size() == forward[j].vertex_map.size()) pairs.push_back({i, j});
    if (pairs.empty()) return false;
    const auto [i, j] = pairs[choice % pairs.size()];
    const FaceGluing g1 = forward[i], g2 = forward[j];
    for (FaceRef f : {g1.from, g1.to, g2.from, g2.to}) c.glue.erase(f);
    FaceGluing a = g1, b = g2;
    a.to = g2.to;
    b.to = g1.to;
    const auto& to_a = shape_data(c.polys[a.to.poly]).faces[a.to.face];
    const auto& to_b = shape_data(c.polys[b.to.poly]).faces[b.to.face];
    for (std::size_t k = 0; k < a.vertex_map.size(); ++k) {
        a.vertex_map[k] = to_a[k];
        b.vertex_map[k] = to_b[k];
    }
    c.add_gluing(a);
    c.add_gluing(b);
    return true;
}

} // namespace

TEST_SUITE("blocks") {
    TEST_CASE("block tables parse and have the expected shapes") {
        CHECK(block_for_type(VertexType::T1).shape == Shape::Octahedron);
        CHECK(block_for_type(VertexType::T2).shape == Shape::Cuboctahedron);
        CHECK(block_for_type(VertexType::T3).shape == Shape::Tetrahedron);
        CHECK(block_for_type(VertexType::T5_3).polyhedron_count == 1);
        for (VertexType t : kBlockTypes) {
            const Block b = block_for_type(t);
            CHECK(b.type == t);
            CHECK(b.boundary_spheres.size() >= 2);
            CHECK(b.boundary_spheres.size() <= 4);
            const Block again = parse_block(block_table(t));
            CHECK(again.inventory() == b.inventory());
        }
        CHECK_THROWS_AS(block_for_type(VertexType::T6_3), Error);
    }

    TEST_CASE("block identification spaces are handlebodies of the right genus") {
        const int genus[] = {5, 4, 3, 3, 2};
        for (int i = 0; i < 5; ++i) {
            const GenusReport g = block_genus(block_for_type(kBlockTypes[i]));
            CHECK_MESSAGE(g.genus == genus[i], type_name(kBlockTypes[i]));
            CHECK(g.consistent);
        }
    }

    TEST_CASE("face pairings are fixed-point-free involutions") {
        for (const char* name : {"p1", "p2", "p3", "chain5"}) {
            const PolyhedralComplex x = complex_of(name);
            for (const auto& [f, g] : x.cells.glue) {
                CHECK(g.from == f);
                CHECK_FALSE(g.to == f);
                REQUIRE(x.cells.glue.count(g.to));
                CHECK(x.cells.glue.at(g.to).to == f);
            }
        }
    }

    TEST_CASE("alpha-divide: interior edges carry four right angles") {
        const PolyhedralComplex x = complex_of("p1");
        CHECK(x.blocks.size() == 1);
        CHECK(x.inventory() == VolumeCoefficients{0, 1, 0});
        CHECK(check_angle_sums(x).ok());
        for (const auto& e : edge_classes(x.cells))
            if (e.kind == EdgeClass::Kind::Interior) {
                CHECK(e.occurrences.size() == 4);
                CHECK(e.angle_units == 12);
            }
        const TorusReport t = boundary_tori(x);
        CHECK(t.ok());
        CHECK(t.count == 2);
    }

    TEST_CASE("corpus complexes pass the invariant suite") {
        for (const char* name : {"p0", "p1", "p2", "p3", "chain5", "chain7"}) {
            const Divide d = make_divide(parse_divide(corpus_entry(name)->text));
            const PolyhedralComplex x = assemble_complex(d, vertex_types(d));
            CHECK_MESSAGE(check_angle_sums(x).ok(), name);
            const TorusReport t = boundary_tori(x);
            CHECK_MESSAGE(t.ok(), name);
            CHECK_MESSAGE(t.count == cusp_count(d), name);
            for (const auto& tiling : t.tilings) CHECK(tiling.euler_characteristic == 0);
            CHECK(x.inventory() == volume_coefficients(census(d)));
        }
    }

    TEST_CASE("chain: the torus over the internal region has 4n squares") {
        for (int n : {3, 5, 8}) {
            const TorusReport t = boundary_tori(complex_of(chain_divide(n)));
            REQUIRE(t.ok());
            CHECK(t.count == n + 1);
            int big = 0;
            for (const auto& tiling : t.tilings) big = std::max(big, tiling.squares);
            CHECK(big == 4 * n);
        }
    }

    TEST_CASE("random prime-admissible divides") {
        RandomOptions o;
        o.prime_blocks_only = true;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            o.size = 2 + static_cast<int>(seed % 3);
            const Divide d = make_divide(random_divide(seed, o));
            const PolyhedralComplex x = assemble_complex(d, vertex_types(d));
            CHECK(check_angle_sums(x).ok());
            const TorusReport t = boundary_tori(x);
            CHECK(t.ok());
            CHECK(t.count == cusp_count(d));
            CHECK(x.inventory() == volume_coefficients(census(d)));
        }
    }

    TEST_CASE("a corrupted face pairing is caught") {
        for (const char* name : {"p2", "p3", "chain5"}) {
            for (std::size_t skip : {0u, 3u, 7u}) {
                PolyhedralComplex x = complex_of(name);
                REQUIRE(swap_two_gluings(x.cells, skip));
                CHECK_MESSAGE(!check_angle_sums(x).ok(), name << " mutation " << skip);
            }
        }
    }

    TEST_CASE("triangulation dump") {
        const std::string dump = export_triangulation(complex_of("p1"));
        std::istringstream in(dump);
        std::string header, word;
        std::getline(in, header);
        CHECK(header == "% divlink polyhedral complex");
        int count = 0;
        in >> word >> count;
        CHECK(word == "polyhedra");
        CHECK(count == 1);
        CHECK(dump.find("polyhedron 0 oct block 0 T5_3") != std::string::npos);
    }

    TEST_CASE("chain cusp data") {
        CHECK(chain_cusp_data(4).meridian == std::array<long long, 2>{0, 4});
        CHECK(chain_cusp_data(4).slope_length == doctest::Approx(4.0));
        CHECK(chain_cusp_data(7).slope_length == doctest::Approx(std::sqrt(58.0)));
        CHECK(chain_cusp_data(5).slope_length < 2 * 3.141592653589793);
    }
}
