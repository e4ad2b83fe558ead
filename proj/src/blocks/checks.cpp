#include <cmath>
#include <map>
#include <set>

#include "divlink/blocks.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

struct UnionFind {
    std::vector<int> p;
    int add() {
        p.push_back(static_cast<int>(p.size()));
        return p.back();
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

struct SphereFaces {
    std::map<FaceRef, SphereRef> sphere_of;
    std::map<std::pair<FaceRef, int>, Prong> prong_of;
};

SphereFaces sphere_faces(const PolyhedralComplex& x) {
    SphereFaces s;
    for (int bi = 0; bi < static_cast<int>(x.blocks.size()); ++bi) {
        const auto& pb = x.blocks[bi];
        for (const auto& f : pb.block.boundary_faces) {
            FaceRef g{f.face.poly + pb.poly_offset, f.face.face};
            s.sphere_of[g] = {bi, f.slot};
            const auto& fv = shape_data(pb.block.shape).faces[f.face.face];
            for (std::size_t k = 0; k < fv.size(); ++k) s.prong_of[{g, fv[k]}] = f.prongs[k];
        }
    }
    return s;
}

} // namespace

AngleReport check_angle_sums(const PolyhedralComplex& x) {
    AngleReport r;
    const SphereFaces sf = sphere_faces(x);
    std::map<SphereRef, int> flat_interface;
    for (int i = 0; i < static_cast<int>(x.interfaces.size()); ++i) {
        if (x.interfaces[i].cellular) continue;
        flat_interface[x.interfaces[i].a] = i;
        flat_interface[x.interfaces[i].b] = i;
    }
    const auto classes = edge_classes(x.cells);
    for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
        const auto& e = classes[k];
        if (!e.orientation_ok)
            r.violations.push_back({k, e.kind, e.angle_units, 12, "edge class closes up with reversed orientation"});
        if (e.kind == EdgeClass::Kind::Interior) {
            ++r.interior_classes;
            if (e.angle_units != 12) r.violations.push_back({k, e.kind, e.angle_units, 12, "interior edge"});
            continue;
        }
        ++r.interface_classes;
        auto s1 = sf.sphere_of.find(e.start_face), s2 = sf.sphere_of.find(e.end_face);
        if (s1 == sf.sphere_of.end() || s2 == sf.sphere_of.end() || !flat_interface.count(s1->second) ||
            !flat_interface.count(s2->second) || flat_interface.at(s1->second) != flat_interface.at(s2->second)) {
            r.violations.push_back({k, e.kind, e.angle_units, 12, "edge ends on faces of no common interface"});
            continue;
        }
        // The other side of a non-cellular interface is flat along this edge.
        if (e.angle_units + 6 != 12)
            r.violations.push_back({k, e.kind, e.angle_units + 6, 12, "edge on a non-cellular interface"});
    }
    return r;
}

TorusReport boundary_tori(const PolyhedralComplex& x) {
    TorusReport r;
    const CellComplex& c = x.cells;
    const SphereFaces sf = sphere_faces(x);

    UnionFind pieces;
    std::vector<int> base(c.polys.size());
    for (std::size_t p = 0; p < c.polys.size(); ++p) {
        base[p] = static_cast<int>(pieces.p.size());
        for (std::size_t v = 0; v < shape_data(c.polys[p]).vertices.size(); ++v) pieces.add();
    }
    auto node = [&](int p, int v) { return base[p] + v; };
    for (const auto& [from, g] : c.glue) {
        const auto& fv = shape_data(c.polys[from.poly]).faces[from.face];
        for (std::size_t k = 0; k < fv.size(); ++k) pieces.unite(node(from.poly, fv[k]), node(g.to.poly, g.vertex_map[k]));
    }

    // Punctures on spheres that stay boundary inside the cell complex.
    std::map<std::pair<SphereRef, Prong>, int> puncture_node;
    for (const auto& [corner, prong] : sf.prong_of) {
        if (c.glued(corner.first)) continue;
        auto key = std::make_pair(sf.sphere_of.at(corner.first), prong);
        int n = node(corner.first.poly, corner.second);
        auto it = puncture_node.find(key);
        if (it == puncture_node.end()) {
            puncture_node[key] = n;
        } else if (pieces.find(it->second) != pieces.find(n)) {
            r.errors.push_back("puncture " + prong_name(prong) + " of a sphere meets two cusp pieces");
        }
    }
    std::set<SphereRef> interfaced;
    for (const auto& ig : x.interfaces) {
        interfaced.insert(ig.a);
        interfaced.insert(ig.b);
        if (ig.cellular) continue;
        for (const auto& [pa, pb] : ig.punctures) {
            auto a = puncture_node.find({ig.a, pa}), b = puncture_node.find({ig.b, pb});
            if (a == puncture_node.end() || b == puncture_node.end()) {
                r.errors.push_back("interface on edge " + std::to_string(ig.edge) + " names a missing puncture");
                continue;
            }
            pieces.unite(a->second, b->second);
        }
    }
    for (const auto& [face, sphere] : sf.sphere_of)
        if (!interfaced.count(sphere)) {
            r.errors.push_back("boundary sphere of block " + std::to_string(sphere.block) + " slot " +
                               std::to_string(sphere.slot) + " is not glued");
            break;
        }

    // Cells of the cusp cross-sections. A polygon side is (polyhedron, vertex,
    // face); a polygon corner is (polyhedron, vertex, neighbouring vertex).
    std::map<int, int> torus_of_root;
    auto torus = [&](int p, int v) {
        int root = pieces.find(node(p, v));
        auto it = torus_of_root.find(root);
        if (it != torus_of_root.end()) return it->second;
        int id = static_cast<int>(r.tilings.size());
        r.tilings.emplace_back();
        return torus_of_root[root] = id;
    };
    UnionFind corners;
    std::map<std::tuple<int, int, int>, int> corner_id;
    auto corner = [&](int p, int v, int w) {
        auto key = std::make_tuple(p, v, w);
        auto it = corner_id.find(key);
        if (it != corner_id.end()) return it->second;
        return corner_id[key] = corners.add();
    };
    for (int p = 0; p < static_cast<int>(c.polys.size()); ++p) {
        const ShapeData& sd = shape_data(c.polys[p]);
        std::vector<int> degree(sd.vertices.size(), 0);
        for (int f = 0; f < static_cast<int>(sd.faces.size()); ++f) {
            const auto& fv = sd.faces[f];
            const int k = static_cast<int>(fv.size());
            for (int i = 0; i < k; ++i) {
                ++degree[fv[i]];
                corner(p, fv[i], fv[(i + 1) % k]);
                corner(p, fv[i], fv[(i + k - 1) % k]);
                TorusTiling& t = r.tilings[torus(p, fv[i])];
                // A glued side is shared by two polygons; count it from one end.
                if (!c.glued({p, f})) t.euler_characteristic -= 2;
                else t.euler_characteristic -= 1;
            }
        }
        for (int v = 0; v < static_cast<int>(sd.vertices.size()); ++v) {
            TorusTiling& t = r.tilings[torus(p, v)];
            t.cells.emplace_back(p, v);
            (degree[v] == 3 ? t.triangles : t.squares) += 1;
            t.euler_characteristic += 2; // polygon faces, doubled with the sides
        }
    }
    for (const auto& [from, g] : c.glue) {
        const auto& fv = shape_data(c.polys[from.poly]).faces[from.face];
        const int k = static_cast<int>(fv.size());
        for (int i = 0; i < k; ++i)
            for (int j : {(i + 1) % k, (i + k - 1) % k})
                corners.unite(corner(from.poly, fv[i], fv[j]), corner(g.to.poly, g.vertex_map[i], g.vertex_map[j]));
    }
    std::set<int> counted;
    for (const auto& [key, id] : corner_id) {
        if (!counted.insert(corners.find(id)).second) continue;
        r.tilings[torus(std::get<0>(key), std::get<1>(key))].euler_characteristic += 2;
    }
    for (auto& t : r.tilings) {
        if (t.euler_characteristic % 2) r.errors.push_back("cusp cell count is inconsistent");
        t.euler_characteristic /= 2;
    }
    for (const auto& [key, n] : puncture_node) {
        int root = pieces.find(n);
        r.tilings[torus_of_root.at(root)].punctures.push_back(key);
    }
    for (std::size_t i = 0; i < r.tilings.size(); ++i)
        if (r.tilings[i].euler_characteristic != 0)
            r.errors.push_back("boundary component " + std::to_string(i) + " has Euler characteristic " +
                               std::to_string(r.tilings[i].euler_characteristic) + ", not a torus");
    for (const auto& e : edge_classes(c))
        if (!e.orientation_ok) {
            r.errors.push_back("complex is not orientable along an edge class");
            break;
        }
    r.count = static_cast<int>(r.tilings.size());
    return r;
}

GenusReport block_genus(const Block& b) {
    GenusReport g;
    g.euler_characteristic = euler_characteristic(block_complex(b));
    for (const auto& s : b.boundary_spheres) g.boundary_euler_characteristic += 2 - s.holes;
    g.genus = 1 - g.euler_characteristic;
    g.consistent = g.boundary_euler_characteristic == 2 - 2 * g.genus;
    return g;
}

ChainCuspData chain_cusp_data(int n) {
    if (n < 1) throw Error("bad-argument", "chain length must be at least 1");
    ChainCuspData d;
    d.meridian = {n - 4LL, static_cast<long long>(n)};
    d.slope_length = std::hypot(static_cast<double>(n - 4), static_cast<double>(n));
    return d;
}

} // namespace divlink
