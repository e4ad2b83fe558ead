#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divlink/hypvol.hpp"
#include "divlink/typing.hpp"

namespace divlink {

enum class Shape { Tetrahedron, Octahedron, Cuboctahedron };

struct ShapeData {
    Shape shape;
    std::string name; // "tet", "oct", "cuboct"
    std::vector<std::array<int, 3>> vertices;
    // Faces list their vertices counterclockwise seen from outside.
    std::vector<std::vector<int>> faces;
    int dihedral_units; // dihedral angle in units of pi/6
};

const ShapeData& shape_data(Shape s);
Shape shape_from_name(const std::string& name);

// Punctures of a boundary sphere, named from the slot's point of view: the
// two lift sheets and the internal quadrants to the left and right of the
// edge leaving the double point.
enum class Prong { UPlus, UMinus, QL, QR };
std::string prong_name(Prong p);
// The prong a puncture becomes when seen from the other end of the edge.
Prong across_edge(Prong p);

struct FaceRef {
    int poly = 0;
    int face = 0;
    auto operator<=>(const FaceRef&) const = default;
};

// Identifies face `from` with face `to`; vertex_map[k] is the image of the
// k-th vertex of `from` (in face order).
struct FaceGluing {
    FaceRef from, to;
    std::vector<int> vertex_map;
};

struct BoundaryFace {
    FaceRef face;
    int slot = 0;
    std::vector<Prong> prongs; // one per vertex of the face, in face order
};

struct BoundarySphere {
    int slot = 0;
    int holes = 0;
    std::vector<FaceRef> faces;
};

struct Block {
    VertexType type = VertexType::UNLISTED;
    std::array<bool, 4> external{};
    Shape shape = Shape::Octahedron;
    int polyhedron_count = 0;
    std::vector<std::string> copies;
    std::vector<FaceGluing> internal_pairings; // each unordered pair once
    std::vector<BoundaryFace> boundary_faces;
    std::vector<BoundarySphere> boundary_spheres; // ordered by slot

    VolumeCoefficients inventory() const;
    const BoundarySphere* sphere_at(int slot) const;
};

Block parse_block(const std::string& text);
Block block_for_type(VertexType t);
// The raw table text a block was read from.
const std::string& block_table(VertexType t);

// A set of polyhedra with some faces glued in pairs; the unglued faces are
// boundary faces. Both blocks and assembled complexes are described this way.
struct CellComplex {
    std::vector<Shape> polys;
    std::map<FaceRef, FaceGluing> glue; // stored in both directions

    bool glued(FaceRef f) const { return glue.count(f) > 0; }
    void add_gluing(const FaceGluing& g);
    std::vector<FaceRef> boundary_faces() const;
};

// One occurrence of an edge class: the polyhedron and the edge's endpoints.
struct EdgeOccurrence {
    int poly;
    int a, b;
};

struct EdgeClass {
    enum class Kind { Interior, Boundary } kind;
    std::vector<EdgeOccurrence> occurrences;
    int angle_units = 0; // sum of dihedral angles, units of pi/6
    bool orientation_ok = true;
    // Boundary classes: the boundary faces at both ends.
    FaceRef start_face{}, end_face{};
};

std::vector<EdgeClass> edge_classes(const CellComplex& c);
// Euler characteristic of the identification space of the truncated polyhedra.
int euler_characteristic(const CellComplex& c);
CellComplex block_complex(const Block& b);

struct PlacedBlock {
    int vertex = -1;   // map vertex
    int crossing = -1; // index into the crossing list
    VertexType type = VertexType::UNLISTED;
    int rotation = 0; // vertex slot = (block slot + rotation) mod 4
    int poly_offset = 0;
    Block block;

    int block_slot(int vertex_slot) const { return (vertex_slot - rotation + 4) % 4; }
};

struct SphereRef {
    int block = 0;
    int slot = 0; // block slot
    auto operator<=>(const SphereRef&) const = default;
};

struct InterfaceGluing {
    int edge = -1; // map edge
    SphereRef a, b;
    int holes = 0;
    // Cellular interfaces identify faces; otherwise each sphere edge of one
    // side lies inside a face of the other.
    bool cellular = false;
    std::vector<FaceGluing> faces;
    std::map<Prong, Prong> punctures; // a's puncture -> b's puncture
    double scale = 1.0;               // free scale adjustment
};

struct PolyhedralComplex {
    std::vector<PlacedBlock> blocks;
    CellComplex cells;
    std::vector<InterfaceGluing> interfaces;

    VolumeCoefficients inventory() const;
    // Block owning a global polyhedron index.
    int block_of_poly(int poly) const;
};

PolyhedralComplex assemble_complex(const Divide& d, const std::vector<VertexType>& types);

struct AngleViolation {
    int edge_class;
    EdgeClass::Kind kind;
    int angle_units;
    int expected_units;
    std::string detail;
};

struct AngleReport {
    int interior_classes = 0;
    int interface_classes = 0;
    std::vector<AngleViolation> violations;
    bool ok() const { return violations.empty(); }
};

AngleReport check_angle_sums(const PolyhedralComplex& x);

struct TorusTiling {
    int squares = 0;
    int triangles = 0;
    int euler_characteristic = 0;
    // Cusp cross-sections as (global polyhedron, ideal vertex).
    std::vector<std::pair<int, int>> cells;
    // Punctures the torus passes through, as (sphere, prong).
    std::vector<std::pair<SphereRef, Prong>> punctures;
};

struct TorusReport {
    int count = 0;
    std::vector<TorusTiling> tilings;
    std::vector<std::string> errors;
    bool ok() const { return errors.empty(); }
};

TorusReport boundary_tori(const PolyhedralComplex& x);

struct GenusReport {
    int euler_characteristic = 0;
    int boundary_euler_characteristic = 0;
    int genus = 0;
    bool consistent = false; // boundary is the closed surface of that genus
};

GenusReport block_genus(const Block& b);

struct ChainCuspData {
    std::array<long long, 2> meridian{};
    double slope_length = 0;
};

ChainCuspData chain_cusp_data(int n);

// Plain-text triangulation dump of the complex.
std::string export_triangulation(const PolyhedralComplex& x);

} // namespace divlink
