#include <algorithm>
#include <set>
#include <sstream>

#include "divlink/blocks.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace detail {
const std::map<std::string, std::string>& block_tables();
}

namespace {

ShapeData make_tet() {
    return {Shape::Tetrahedron, "tet", {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
            {{2, 1, 3}, {3, 0, 2}, {1, 0, 3}, {2, 0, 1}}, 2};
}

ShapeData make_oct() {
    return {Shape::Octahedron,
            "oct",
            {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
            {{4, 0, 2}, {2, 0, 5}, {3, 0, 4}, {5, 0, 3}, {2, 1, 4}, {5, 1, 2}, {4, 1, 3}, {3, 1, 5}},
            3};
}

ShapeData make_cuboct() {
    return {Shape::Cuboctahedron,
            "cuboct",
            {{1, 1, 0}, {1, -1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, 0, 1}, {1, 0, -1}, {-1, 0, 1}, {-1, 0, -1},
             {0, 1, 1}, {0, 1, -1}, {0, -1, 1}, {0, -1, -1}},
            {{4, 0, 8}, {9, 0, 5}, {10, 1, 4}, {5, 1, 11}, {8, 2, 6}, {7, 2, 9}, {6, 3, 10}, {11, 3, 7},
             {5, 0, 4, 1}, {6, 2, 7, 3}, {8, 0, 9, 2}, {11, 1, 10, 3}, {10, 4, 8, 6}, {9, 5, 11, 7}},
            3};
}

Prong parse_prong(const std::string& s) {
    if (s == "u+") return Prong::UPlus;
    if (s == "u-") return Prong::UMinus;
    if (s == "qL") return Prong::QL;
    if (s == "qR") return Prong::QR;
    throw Error("block-table", "unknown prong " + s);
}

// "a>b" or "a=name"
std::pair<int, std::string> split_token(const std::string& tok, char sep) {
    auto k = tok.find(sep);
    if (k == std::string::npos) throw Error("block-table", "malformed token " + tok);
    return {std::stoi(tok.substr(0, k)), tok.substr(k + 1)};
}

std::vector<int> face_vertices_checked(const ShapeData& sd, int face) {
    if (face < 0 || face >= static_cast<int>(sd.faces.size()))
        throw Error("block-table", "face index out of range");
    return sd.faces[face];
}

} // namespace

const ShapeData& shape_data(Shape s) {
    static const ShapeData tet = make_tet(), oct = make_oct(), cuboct = make_cuboct();
    switch (s) {
    case Shape::Tetrahedron: return tet;
    case Shape::Octahedron: return oct;
    case Shape::Cuboctahedron: return cuboct;
    }
    return oct;
}

Shape shape_from_name(const std::string& name) {
    for (Shape s : {Shape::Tetrahedron, Shape::Octahedron, Shape::Cuboctahedron})
        if (shape_data(s).name == name) return s;
    throw Error("block-table", "unknown shape " + name);
}

std::string prong_name(Prong p) {
    switch (p) {
    case Prong::UPlus: return "u+";
    case Prong::UMinus: return "u-";
    case Prong::QL: return "qL";
    case Prong::QR: return "qR";
    }
    return "?";
}

Prong across_edge(Prong p) {
    switch (p) {
    case Prong::UPlus: return Prong::UMinus;
    case Prong::UMinus: return Prong::UPlus;
    case Prong::QL: return Prong::QR;
    case Prong::QR: return Prong::QL;
    }
    return p;
}

VolumeCoefficients Block::inventory() const {
    VolumeCoefficients c;
    switch (shape) {
    case Shape::Tetrahedron: c.tet = polyhedron_count; break;
    case Shape::Octahedron: c.oct = polyhedron_count; break;
    case Shape::Cuboctahedron: c.cuboct = polyhedron_count; break;
    }
    return c;
}

const BoundarySphere* Block::sphere_at(int slot) const {
    for (const auto& s : boundary_spheres)
        if (s.slot == slot) return &s;
    return nullptr;
}

Block parse_block(const std::string& text) {
    Block b;
    std::istringstream in(text);
    std::string line;
    bool have_type = false, have_shape = false;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "type") {
            std::string t;
            ls >> t;
            b.type = type_from_name(t);
            have_type = true;
        } else if (key == "external") {
            for (auto& e : b.external) {
                int x;
                if (!(ls >> x)) throw Error("block-table", "external needs four flags");
                e = x != 0;
            }
        } else if (key == "polyhedra") {
            std::string shape;
            ls >> shape >> b.polyhedron_count;
            b.shape = shape_from_name(shape);
            have_shape = true;
        } else if (key == "copies") {
            std::string c;
            while (ls >> c) b.copies.push_back(c);
        } else if (key == "glue") {
            if (!have_shape) throw Error("block-table", "glue before polyhedra");
            FaceGluing g;
            ls >> g.from.poly >> g.from.face >> g.to.poly >> g.to.face;
            auto fv = face_vertices_checked(shape_data(b.shape), g.from.face);
            std::string tok;
            for (int v : fv) {
                if (!(ls >> tok)) throw Error("block-table", "glue line too short");
                auto [src, dst] = split_token(tok, '>');
                if (src != v) throw Error("block-table", "glue vertices out of face order");
                g.vertex_map.push_back(std::stoi(dst));
            }
            b.internal_pairings.push_back(std::move(g));
        } else if (key == "boundary") {
            if (!have_shape) throw Error("block-table", "boundary before polyhedra");
            BoundaryFace f;
            ls >> f.face.poly >> f.face.face >> f.slot;
            auto fv = face_vertices_checked(shape_data(b.shape), f.face.face);
            std::string tok;
            for (int v : fv) {
                if (!(ls >> tok)) throw Error("block-table", "boundary line too short");
                auto [src, name] = split_token(tok, '=');
                if (src != v) throw Error("block-table", "boundary vertices out of face order");
                f.prongs.push_back(parse_prong(name));
            }
            b.boundary_faces.push_back(std::move(f));
        } else {
            throw Error("block-table", "unknown key " + key);
        }
    }
    if (!have_type || !have_shape) throw Error("block-table", "missing type or polyhedra line");
    std::map<int, BoundarySphere> spheres;
    std::map<int, std::set<Prong>> prongs;
    for (const auto& f : b.boundary_faces) {
        spheres[f.slot].slot = f.slot;
        spheres[f.slot].faces.push_back(f.face);
        prongs[f.slot].insert(f.prongs.begin(), f.prongs.end());
    }
    for (auto& [slot, s] : spheres) {
        s.holes = static_cast<int>(prongs[slot].size());
        b.boundary_spheres.push_back(s);
    }
    return b;
}

const std::string& block_table(VertexType t) {
    const auto& tables = detail::block_tables();
    auto it = tables.find(type_name(t));
    if (it == tables.end()) throw Error("unsupported-type", "no block for type " + type_name(t));
    return it->second;
}

Block block_for_type(VertexType t) {
    static const std::map<VertexType, Block> cache = [] {
        std::map<VertexType, Block> m;
        for (const auto& [name, text] : detail::block_tables()) m.emplace(type_from_name(name), parse_block(text));
        return m;
    }();
    auto it = cache.find(t);
    if (it == cache.end()) throw Error("unsupported-type", "no block for type " + type_name(t));
    return it->second;
}

} // namespace divlink
