#include <algorithm>
#include <deque>
#include <numeric>
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
    int classes() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(p.size()); ++i) c += find(i) == i;
        return c;
    }
};

int index_in(const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

const std::vector<int>& face_of(const CellComplex& c, FaceRef f) { return shape_data(c.polys[f.poly]).faces[f.face]; }

// The face of the shape other than `face` that contains edge {a, b}.
int other_face(Shape s, int face, int a, int b) {
    const auto& faces = shape_data(s).faces;
    for (int g = 0; g < static_cast<int>(faces.size()); ++g) {
        if (g == face) continue;
        const auto& f = faces[g];
        int i = index_in(f, a);
        if (i < 0) continue;
        int k = static_cast<int>(f.size());
        if (f[(i + 1) % k] == b || f[(i + k - 1) % k] == b) return g;
    }
    throw Error("internal", "edge not on two faces");
}

int image_of(const CellComplex& c, const FaceGluing& g, int v) {
    return g.vertex_map[index_in(face_of(c, g.from), v)];
}

struct Walk {
    std::vector<EdgeOccurrence> occ;
    bool closed = false;
    bool orientation_ok = true;
    FaceRef end_face{};
};

// Enter polyhedron p through face `face` along edge a-b, leave through the
// other face containing that edge, and continue until the walk closes up or
// reaches an unglued face.
Walk walk(const CellComplex& c, int p, int face, int a, int b) {
    Walk w;
    const int p0 = p, f0 = face, a0 = a, b0 = b;
    const std::size_t cap = 64 * c.polys.size() + 64;
    for (;;) {
        w.occ.push_back({p, a, b});
        int g = other_face(c.polys[p], face, a, b);
        auto it = c.glue.find({p, g});
        if (it == c.glue.end()) {
            w.end_face = {p, g};
            return w;
        }
        const FaceGluing& gl = it->second;
        int na = image_of(c, gl, a), nb = image_of(c, gl, b);
        p = gl.to.poly;
        face = gl.to.face;
        a = na;
        b = nb;
        if (p == p0 && face == f0 && ((a == a0 && b == b0) || (a == b0 && b == a0))) {
            w.closed = true;
            w.orientation_ok = a == a0;
            return w;
        }
        if (w.occ.size() > cap) throw Error("internal", "edge walk does not close");
    }
}

std::tuple<int, int, int> edge_key(int p, int a, int b) { return {p, std::min(a, b), std::max(a, b)}; }

} // namespace

void CellComplex::add_gluing(const FaceGluing& g) {
    if (glue.count(g.from) || glue.count(g.to)) throw Error("internal", "face glued twice");
    glue[g.from] = g;
    FaceGluing inv{g.to, g.from, {}};
    const auto& from = shape_data(polys[g.from.poly]).faces[g.from.face];
    const auto& to = shape_data(polys[g.to.poly]).faces[g.to.face];
    for (int w : to) inv.vertex_map.push_back(from[index_in(g.vertex_map, w)]);
    glue[g.to] = inv;
}

std::vector<FaceRef> CellComplex::boundary_faces() const {
    std::vector<FaceRef> out;
    for (int p = 0; p < static_cast<int>(polys.size()); ++p)
        for (int f = 0; f < static_cast<int>(shape_data(polys[p]).faces.size()); ++f)
            if (!glued({p, f})) out.push_back({p, f});
    return out;
}

std::vector<EdgeClass> edge_classes(const CellComplex& c) {
    std::set<std::tuple<int, int, int>> seen;
    std::vector<EdgeClass> out;
    auto record = [&](const Walk& w, EdgeClass::Kind kind, FaceRef start) {
        EdgeClass e;
        e.kind = kind;
        e.occurrences = w.occ;
        e.orientation_ok = w.orientation_ok;
        e.start_face = start;
        e.end_face = w.end_face;
        for (const auto& o : w.occ) {
            seen.insert(edge_key(o.poly, o.a, o.b));
            e.angle_units += shape_data(c.polys[o.poly]).dihedral_units;
        }
        out.push_back(std::move(e));
    };
    for (FaceRef f : c.boundary_faces()) {
        const auto& fv = face_of(c, f);
        for (std::size_t i = 0; i < fv.size(); ++i) {
            int a = fv[i], b = fv[(i + 1) % fv.size()];
            if (seen.count(edge_key(f.poly, a, b))) continue;
            record(walk(c, f.poly, f.face, a, b), EdgeClass::Kind::Boundary, f);
        }
    }
    for (int p = 0; p < static_cast<int>(c.polys.size()); ++p) {
        const auto& faces = shape_data(c.polys[p]).faces;
        for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi)
            for (std::size_t i = 0; i < faces[fi].size(); ++i) {
                int a = faces[fi][i], b = faces[fi][(i + 1) % faces[fi].size()];
                if (seen.count(edge_key(p, a, b))) continue;
                Walk w = walk(c, p, fi, a, b);
                if (!w.closed) throw Error("internal", "interior edge walk reached the boundary");
                record(w, EdgeClass::Kind::Interior, {p, fi});
            }
    }
    return out;
}

int euler_characteristic(const CellComplex& c) {
    const int cells3 = static_cast<int>(c.polys.size());
    int vertices_total = 0;
    for (Shape s : c.polys) vertices_total += static_cast<int>(shape_data(s).vertices.size());
    const int cells2 = static_cast<int>(c.glue.size()) / 2 + static_cast<int>(c.boundary_faces().size()) + vertices_total;
    const auto classes = edge_classes(c);

    // Truncation edges: one per (polyhedron, face, vertex), identified across glued faces.
    UnionFind trunc;
    std::map<std::tuple<int, int, int>, int> tid;
    for (int p = 0; p < cells3; ++p) {
        const auto& faces = shape_data(c.polys[p]).faces;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int v : faces[f]) tid[{p, f, v}] = trunc.add();
    }
    for (const auto& [from, g] : c.glue) {
        const auto& fv = face_of(c, from);
        for (std::size_t k = 0; k < fv.size(); ++k)
            trunc.unite(tid[{from.poly, from.face, fv[k]}], tid[{g.to.poly, g.to.face, g.vertex_map[k]}]);
    }
    const int cells1 = static_cast<int>(classes.size()) + trunc.classes();

    // Truncation vertices: one per end of each polyhedron edge, identified along edge classes.
    UnionFind ends;
    std::map<std::tuple<int, int, int, int>, int> vid;
    auto end_id = [&](const EdgeOccurrence& o, int at) {
        auto key = std::make_tuple(o.poly, std::min(o.a, o.b), std::max(o.a, o.b), at);
        auto it = vid.find(key);
        if (it != vid.end()) return it->second;
        return vid[key] = ends.add();
    };
    for (const auto& e : classes) {
        for (const auto& o : e.occurrences) {
            end_id(o, o.a);
            end_id(o, o.b);
        }
        for (std::size_t k = 0; k + 1 < e.occurrences.size(); ++k) {
            const auto& o1 = e.occurrences[k];
            const auto& o2 = e.occurrences[k + 1];
            ends.unite(end_id(o1, o1.a), end_id(o2, o2.a));
            ends.unite(end_id(o1, o1.b), end_id(o2, o2.b));
        }
    }
    const int cells0 = ends.classes();
    return cells0 - cells1 + cells2 - cells3;
}

CellComplex block_complex(const Block& b) {
    CellComplex c;
    c.polys.assign(b.polyhedron_count, b.shape);
    for (const auto& g : b.internal_pairings) c.add_gluing(g);
    return c;
}

VolumeCoefficients PolyhedralComplex::inventory() const {
    VolumeCoefficients v;
    for (const auto& b : blocks) v += b.block.inventory();
    return v;
}

int PolyhedralComplex::block_of_poly(int poly) const {
    for (int i = static_cast<int>(blocks.size()) - 1; i >= 0; --i)
        if (blocks[i].poly_offset <= poly) return i;
    return -1;
}

namespace {

// Corner of a boundary face, as (face, vertex).
using Corner = std::pair<FaceRef, int>;

// Sphere-edge adjacency: across the edge {a,b} of boundary face F lies
// boundary face F2, with a and b landing on the given vertices of F2.
struct Across {
    FaceRef face;
    int a_image, b_image;
};
using SphereAdjacency = std::map<std::tuple<FaceRef, int, int>, Across>;

SphereAdjacency sphere_adjacency(const CellComplex& c) {
    SphereAdjacency adj;
    for (const auto& e : edge_classes(c)) {
        if (e.kind != EdgeClass::Kind::Boundary) continue;
        const auto& s = e.occurrences.front();
        const auto& t = e.occurrences.back();
        adj[{e.start_face, s.a, s.b}] = {e.end_face, t.a, t.b};
        adj[{e.start_face, s.b, s.a}] = {e.end_face, t.b, t.a};
        adj[{e.end_face, t.a, t.b}] = {e.start_face, s.a, s.b};
        adj[{e.end_face, t.b, t.a}] = {e.start_face, s.b, s.a};
    }
    return adj;
}

struct SphereView {
    std::vector<FaceRef> faces;       // global refs
    std::map<Corner, Prong> prongs;   // global corner -> prong
};

// Try to identify sphere A with sphere B face by face, orientation reversing,
// so that every corner labelled p on A lands on a corner labelled sigma(p).
std::optional<std::vector<FaceGluing>> match_cellular(const CellComplex& c, const SphereAdjacency& adj, const SphereView& A,
                                                      const SphereView& B, const std::map<Prong, Prong>& sigma) {
    if (A.faces.size() != B.faces.size() || A.faces.empty()) return std::nullopt;
    auto size_of = [&](FaceRef f) { return static_cast<int>(face_of(c, f).size()); };
    for (FaceRef g0 : B.faces) {
        if (size_of(g0) != size_of(A.faces[0])) continue;
        for (int s0 = 0; s0 < size_of(g0); ++s0) {
            std::map<FaceRef, std::pair<FaceRef, int>> phi;
            std::set<FaceRef> used;
            std::deque<FaceRef> queue;
            phi[A.faces[0]] = {g0, s0};
            used.insert(g0);
            queue.push_back(A.faces[0]);
            bool ok = true;
            while (ok && !queue.empty()) {
                FaceRef f = queue.front();
                queue.pop_front();
                auto [g, s] = phi[f];
                const auto& fv = face_of(c, f);
                const auto& gv = face_of(c, g);
                const int k = static_cast<int>(fv.size());
                auto img = [&](int i) { return gv[((s - i) % k + k) % k]; };
                for (int i = 0; ok && i < k; ++i) {
                    if (sigma.at(A.prongs.at({f, fv[i]})) != B.prongs.at({g, img(i)})) ok = false;
                }
                for (int i = 0; ok && i < k; ++i) {
                    int a = fv[i], b = fv[(i + 1) % k];
                    auto ia = adj.find({f, a, b});
                    auto ib = adj.find({g, img(i), img((i + 1) % k)});
                    if (ia == adj.end() || ib == adj.end()) {
                        ok = false;
                        break;
                    }
                    FaceRef f2 = ia->second.face, g2 = ib->second.face;
                    const auto& f2v = face_of(c, f2);
                    const auto& g2v = face_of(c, g2);
                    if (f2v.size() != g2v.size()) {
                        ok = false;
                        break;
                    }
                    const int k2 = static_cast<int>(f2v.size());
                    int j = index_in(f2v, ia->second.a_image), jj = index_in(g2v, ib->second.a_image);
                    int s2 = (j + jj) % k2;
                    int jd = index_in(f2v, ia->second.b_image);
                    if (g2v[((s2 - jd) % k2 + k2) % k2] != ib->second.b_image) {
                        ok = false;
                        break;
                    }
                    auto it = phi.find(f2);
                    if (it != phi.end()) {
                        if (it->second != std::make_pair(g2, s2)) ok = false;
                        continue;
                    }
                    if (used.count(g2)) {
                        ok = false;
                        break;
                    }
                    phi[f2] = {g2, s2};
                    used.insert(g2);
                    queue.push_back(f2);
                }
            }
            if (!ok || phi.size() != A.faces.size()) continue;
            std::vector<FaceGluing> out;
            for (FaceRef f : A.faces) {
                auto [g, s] = phi[f];
                const auto& fv = face_of(c, f);
                const auto& gv = face_of(c, g);
                const int k = static_cast<int>(fv.size());
                FaceGluing gl{f, g, {}};
                for (int i = 0; i < k; ++i) gl.vertex_map.push_back(gv[((s - i) % k + k) % k]);
                out.push_back(std::move(gl));
            }
            return out;
        }
    }
    return std::nullopt;
}

int find_rotation(const QuadrantProfile& p, const Block& b) {
    for (int r = 0; r < 4; ++r) {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) {
            int bs = (i - r + 4) % 4;
            if (p.external[i] != b.external[bs]) ok = false;
            if (p.endpoint_edge[i] != (b.sphere_at(bs) == nullptr)) ok = false;
        }
        if (ok) return r;
    }
    throw Error("internal", "block does not fit the local picture of its vertex");
}

} // namespace

PolyhedralComplex assemble_complex(const Divide& d, const std::vector<VertexType>& types) {
    if (!d.connected) throw Error("disconnected", "complex assembly needs a connected divide");
    const PlanarMap& m = d.map;
    if (types.size() != m.crossing_vertex.size()) throw Error("internal", "one type per double point expected");
    PolyhedralComplex x;
    std::map<int, int> block_of_vertex;
    for (std::size_t k = 0; k < types.size(); ++k) {
        if (!block_type(types[k]))
            throw Error("unsupported-type", "double point " + std::to_string(k) + " has type " + type_name(types[k]) +
                                                " which has no block");
        PlacedBlock pb;
        pb.vertex = m.crossing_vertex[k];
        pb.crossing = static_cast<int>(k);
        pb.type = types[k];
        pb.block = block_for_type(types[k]);
        pb.rotation = find_rotation(quadrant_profile(d, pb.vertex), pb.block);
        pb.poly_offset = static_cast<int>(x.cells.polys.size());
        for (int i = 0; i < pb.block.polyhedron_count; ++i) x.cells.polys.push_back(pb.block.shape);
        for (const auto& g : pb.block.internal_pairings) {
            FaceGluing h = g;
            h.from.poly += pb.poly_offset;
            h.to.poly += pb.poly_offset;
            x.cells.add_gluing(h);
        }
        block_of_vertex[pb.vertex] = static_cast<int>(x.blocks.size());
        x.blocks.push_back(std::move(pb));
    }

    // Sphere-edge adjacency is block-local, so it can be read off before any
    // interface is glued.
    const SphereAdjacency adj = sphere_adjacency(x.cells);
    auto view = [&](int bi, int slot) {
        const PlacedBlock& pb = x.blocks[bi];
        SphereView v;
        for (const auto& f : pb.block.boundary_faces) {
            if (f.slot != slot) continue;
            FaceRef g{f.face.poly + pb.poly_offset, f.face.face};
            v.faces.push_back(g);
            const auto& fv = shape_data(pb.block.shape).faces[f.face.face];
            for (std::size_t k = 0; k < fv.size(); ++k) v.prongs[{g, fv[k]}] = f.prongs[k];
        }
        return v;
    };

    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != EdgeKind::Divide) continue;
        const int h = m.edges[e].half, t = m.halfedges[h].twin;
        const int v = m.halfedges[h].origin, w = m.halfedges[t].origin;
        if (m.vertices[v].kind != VertexKind::DoublePoint || m.vertices[w].kind != VertexKind::DoublePoint) continue;
        const int bv = block_of_vertex.at(v), bw = block_of_vertex.at(w);
        const int sv = x.blocks[bv].block_slot(index_in(m.vertices[v].rotation, h));
        const int sw = x.blocks[bw].block_slot(index_in(m.vertices[w].rotation, t));
        const BoundarySphere* A = x.blocks[bv].block.sphere_at(sv);
        const BoundarySphere* B = x.blocks[bw].block.sphere_at(sw);
        if (!A || !B || A->holes != B->holes)
            throw Error("hole-count-mismatch", "edge " + std::to_string(e) + ": spheres at its two ends do not match");
        InterfaceGluing ig;
        ig.edge = static_cast<int>(e);
        ig.a = {bv, sv};
        ig.b = {bw, sw};
        ig.holes = A->holes;
        SphereView va = view(bv, sv), vb = view(bw, sw);
        std::set<Prong> pa, pb;
        for (const auto& [corner, p] : va.prongs) pa.insert(p);
        for (const auto& [corner, p] : vb.prongs) pb.insert(p);
        for (Prong p : pa) {
            if (!pb.count(across_edge(p)))
                throw Error("hole-count-mismatch", "edge " + std::to_string(e) + ": puncture " + prong_name(p) +
                                                       " has no partner");
            ig.punctures[p] = across_edge(p);
        }
        if (auto faces = match_cellular(x.cells, adj, va, vb, ig.punctures)) {
            ig.cellular = true;
            ig.faces = *faces;
            for (const auto& g : ig.faces) x.cells.add_gluing(g);
        }
        x.interfaces.push_back(std::move(ig));
    }
    return x;
}

} // namespace divlink
