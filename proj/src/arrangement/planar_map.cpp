#include <algorithm>
#include <map>
#include <numeric>

#include "divlink/error.hpp"
#include "divlink/planar_map.hpp"

namespace divlink {
namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

IVec direction_between(const QPoint& a, const QPoint& b) {
    Q dx = b.x - a.x, dy = b.y - a.y;
    mpz_class l = lcm(dx.get_den(), dy.get_den());
    mpz_class ix = dx.get_num() * (l / dx.get_den());
    mpz_class iy = dy.get_num() * (l / dy.get_den());
    mpz_class g = gcd(ix, iy);
    ix /= g;
    iy /= g;
    return {ix.get_si(), iy.get_si()};
}

// Position along the square boundary, counterclockwise from (-N,-N).
std::int64_t perimeter_param(const IPoint& p, std::int64_t n) {
    if (p.y == -n && p.x < n) return p.x + n;
    if (p.x == n && p.y < n) return 2 * n + (p.y + n);
    if (p.y == n && p.x > -n) return 4 * n + (n - p.x);
    return 6 * n + (n - p.y);
}

struct Item {
    QPoint point;
    int vertex; // -1 for a plain polyline point
};

Q cycle_area2(const PlanarMap& m, int start) {
    Q area = 0;
    int h = start;
    do {
        std::vector<QPoint> p = m.path(h);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) area += qcross(p[i], p[i + 1]);
        h = m.halfedges[h].next;
    } while (h != start);
    return area;
}

bool cycle_contains(const PlanarMap& m, int start, const QPoint& q) {
    bool inside = false;
    int h = start;
    do {
        std::vector<QPoint> p = m.path(h);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            const QPoint& a = p[i];
            const QPoint& b = p[i + 1];
            if ((a.y > q.y) != (b.y > q.y)) {
                Q x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if (x > q.x) inside = !inside;
            }
        }
        h = m.halfedges[h].next;
    } while (h != start);
    return inside;
}

} // namespace

std::vector<QPoint> PlanarMap::path(int h) const {
    const MapEdge& e = edges[halfedges[h].edge];
    if (e.half == h) return e.geometry;
    return {e.geometry.rbegin(), e.geometry.rend()};
}

int PlanarMap::graph_components() const {
    UnionFind uf(vertices.size());
    for (const auto& e : edges) uf.unite(halfedges[e.half].origin, halfedges[halfedges[e.half].twin].origin);
    int c = 0;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (uf.find(static_cast<int>(v)) == static_cast<int>(v)) ++c;
    return c;
}

PlanarMap build_planar_map(const StrandSet& s, Exec exec) { return build_planar_map(s, intersect_strands(s, exec)); }

PlanarMap build_planar_map(const StrandSet& s, const CrossingSet& cs) {
    PlanarMap m;
    m.strands = s;
    m.crossings = cs;
    const std::int64_t n = s.boundary_half_width;

    auto add_vertex = [&](VertexKind k, QPoint p) {
        m.vertices.push_back({k, std::move(p), {}});
        return static_cast<int>(m.vertices.size()) - 1;
    };
    // A strand endpoint sitting on a corner of the square replaces that corner.
    const IPoint corners[4] = {{-n, -n}, {n, -n}, {n, n}, {-n, n}};
    std::vector<std::pair<std::int64_t, int>> boundary_vertices;
    for (const auto& c : corners) {
        bool taken = false;
        for (const auto& st : s.strands)
            if (st.kind == StrandKind::Open && (st.points.front() == c || st.points.back() == c)) taken = true;
        if (!taken) boundary_vertices.emplace_back(perimeter_param(c, n), add_vertex(VertexKind::Corner, QPoint(c)));
    }

    m.crossing_vertex.resize(cs.crossings.size());
    for (std::size_t k = 0; k < cs.crossings.size(); ++k)
        m.crossing_vertex[k] = add_vertex(VertexKind::DoublePoint, cs.crossings[k].position);

    // Crossing events per (strand, segment), ordered by parameter.
    std::vector<std::map<int, std::vector<std::pair<Q, int>>>> events(s.strands.size());
    for (std::size_t k = 0; k < cs.crossings.size(); ++k) {
        const Crossing& c = cs.crossings[k];
        events[c.a.strand][c.a.segment].emplace_back(c.a.t, static_cast<int>(k));
        events[c.b.strand][c.b.segment].emplace_back(c.b.t, static_cast<int>(k));
    }

    auto add_edge = [&](EdgeKind kind, int strand, int from, int to, std::vector<QPoint> geom) {
        int e = static_cast<int>(m.edges.size());
        int h0 = static_cast<int>(m.halfedges.size());
        HalfEdge a, b;
        a.origin = from;
        b.origin = to;
        a.twin = h0 + 1;
        b.twin = h0;
        a.edge = b.edge = e;
        a.direction = direction_between(geom[0], geom[1]);
        b.direction = direction_between(geom[geom.size() - 1], geom[geom.size() - 2]);
        m.halfedges.push_back(a);
        m.halfedges.push_back(b);
        m.edges.push_back({kind, strand, h0, std::move(geom)});
    };

    for (std::size_t k = 0; k < s.strands.size(); ++k) {
        const Strand& st = s.strands[k];
        auto& ev = events[k];
        for (auto& [seg, list] : ev) std::sort(list.begin(), list.end());
        std::vector<Item> items;
        const int segs = static_cast<int>(st.segment_count());
        if (st.kind == StrandKind::Open) {
            int start = add_vertex(VertexKind::Endpoint, QPoint(st.points.front()));
            int end = add_vertex(VertexKind::Endpoint, QPoint(st.points.back()));
            boundary_vertices.emplace_back(perimeter_param(st.points.front(), n), start);
            boundary_vertices.emplace_back(perimeter_param(st.points.back(), n), end);
            items.push_back({QPoint(st.points.front()), start});
            for (int j = 0; j < segs; ++j) {
                if (auto it = ev.find(j); it != ev.end())
                    for (const auto& [t, c] : it->second) items.push_back({cs.crossings[c].position, m.crossing_vertex[c]});
                if (j + 1 < segs) items.push_back({QPoint(st.points[j + 1]), -1});
            }
            items.push_back({QPoint(st.points.back()), end});
        } else {
            std::vector<Item> cyc;
            for (int j = 0; j < segs; ++j) {
                cyc.push_back({QPoint(st.points[j]), -1});
                if (auto it = ev.find(j); it != ev.end())
                    for (const auto& [t, c] : it->second) cyc.push_back({cs.crossings[c].position, m.crossing_vertex[c]});
            }
            auto first = std::find_if(cyc.begin(), cyc.end(), [](const Item& it) { return it.vertex >= 0; });
            if (first == cyc.end()) {
                cyc[0].vertex = add_vertex(VertexKind::Anchor, cyc[0].point);
                first = cyc.begin();
            }
            std::rotate(cyc.begin(), first, cyc.end());
            items = cyc;
            items.push_back(cyc.front());
        }
        std::vector<QPoint> geom{items[0].point};
        int from = items[0].vertex;
        for (std::size_t i = 1; i < items.size(); ++i) {
            geom.push_back(items[i].point);
            if (items[i].vertex >= 0) {
                add_edge(EdgeKind::Divide, static_cast<int>(k), from, items[i].vertex, std::move(geom));
                geom = {items[i].point};
                from = items[i].vertex;
            }
        }
    }

    std::sort(boundary_vertices.begin(), boundary_vertices.end());
    for (std::size_t i = 0; i < boundary_vertices.size(); ++i) {
        if (i > 0 && boundary_vertices[i].first == boundary_vertices[i - 1].first)
            throw Error("shared-endpoint", "two boundary vertices coincide at " +
                                               to_string(m.vertices[boundary_vertices[i].second].position));
        int a = boundary_vertices[i].second;
        int b = boundary_vertices[(i + 1) % boundary_vertices.size()].second;
        add_edge(EdgeKind::Boundary, -1, a, b, {m.vertices[a].position, m.vertices[b].position});
    }

    for (std::size_t h = 0; h < m.halfedges.size(); ++h) m.vertices[m.halfedges[h].origin].rotation.push_back(static_cast<int>(h));
    for (auto& v : m.vertices) {
        std::sort(v.rotation.begin(), v.rotation.end(), [&](int a, int b) {
            return ccw_less(m.halfedges[a].direction, m.halfedges[b].direction);
        });
        for (std::size_t i = 1; i < v.rotation.size(); ++i)
            if (m.halfedges[v.rotation[i]].direction == m.halfedges[v.rotation[i - 1]].direction)
                throw Error("tangency", "two edges leave " + to_string(v.position) + " in the same direction");
    }
    for (std::size_t h = 0; h < m.halfedges.size(); ++h) {
        int t = m.halfedges[h].twin;
        const auto& rot = m.vertices[m.halfedges[t].origin].rotation;
        auto it = std::find(rot.begin(), rot.end(), t);
        std::size_t idx = static_cast<std::size_t>(it - rot.begin());
        m.halfedges[h].next = rot[(idx + rot.size() - 1) % rot.size()];
    }

    // Boundary cycles; positive area ones bound faces, the others are holes
    // (outer cycles of components floating inside a face) or the outside.
    std::vector<int> cycle_of(m.halfedges.size(), -1);
    std::vector<int> cycles;
    for (std::size_t h = 0; h < m.halfedges.size(); ++h) {
        if (cycle_of[h] >= 0) continue;
        int id = static_cast<int>(cycles.size());
        cycles.push_back(static_cast<int>(h));
        int g = static_cast<int>(h);
        do {
            cycle_of[g] = id;
            g = m.halfedges[g].next;
        } while (g != static_cast<int>(h));
    }
    const int outer_boundary_half = m.halfedges[m.edges.back().half].twin;
    UnionFind comp(m.vertices.size());
    for (const auto& e : m.edges) comp.unite(m.halfedges[e.half].origin, m.halfedges[m.halfedges[e.half].twin].origin);

    std::vector<Q> area(cycles.size());
    std::vector<int> face_of_cycle(cycles.size(), -1);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        area[c] = cycle_area2(m, cycles[c]);
        if (area[c] > 0) {
            face_of_cycle[c] = static_cast<int>(m.faces.size());
            m.faces.push_back({{cycles[c]}, false});
        }
    }
    m.outside_face = static_cast<int>(m.faces.size());
    m.faces.push_back({{cycles[cycle_of[outer_boundary_half]]}, true});
    face_of_cycle[cycle_of[outer_boundary_half]] = m.outside_face;
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (face_of_cycle[c] >= 0) continue;
        int own = comp.find(m.halfedges[cycles[c]].origin);
        const QPoint& probe = m.vertices[m.halfedges[cycles[c]].origin].position;
        int best = -1;
        for (std::size_t d = 0; d < cycles.size(); ++d) {
            if (area[d] <= 0 || comp.find(m.halfedges[cycles[d]].origin) == own) continue;
            if (!cycle_contains(m, cycles[d], probe)) continue;
            if (best < 0 || area[d] < area[best]) best = static_cast<int>(d);
        }
        if (best < 0) throw Error("internal", "hole cycle without an enclosing face");
        face_of_cycle[c] = face_of_cycle[best];
        m.faces[face_of_cycle[best]].cycles.push_back(cycles[c]);
    }
    for (std::size_t h = 0; h < m.halfedges.size(); ++h) m.halfedges[h].face = face_of_cycle[cycle_of[h]];
    return m;
}

} // namespace divlink
