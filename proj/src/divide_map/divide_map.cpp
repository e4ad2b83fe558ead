#include <algorithm>
#include <numeric>

#include "divlink/divide_map.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

// Continue straight through a vertex: opposite half-edge at a double point,
// the other half-edge at an anchor.
int straight_on(const PlanarMap& m, int h) {
    int v = m.head(h);
    const auto& rot = m.vertices[v].rotation;
    int t = m.halfedges[h].twin;
    std::size_t idx = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), t) - rot.begin());
    return rot[(idx + rot.size() / 2) % rot.size()];
}

} // namespace

std::vector<Region> regions(const PlanarMap& m) {
    std::vector<Region> out;
    for (std::size_t f = 0; f < m.faces.size(); ++f) {
        if (m.faces[f].outside) continue;
        bool touches = false;
        for (int start : m.faces[f].cycles) {
            int h = start;
            do {
                touches = touches || m.is_boundary(h);
                h = m.halfedges[h].next;
            } while (h != start);
        }
        out.push_back({static_cast<int>(f), !touches});
    }
    return out;
}

StrandCensus strand_census(const PlanarMap& m) {
    StrandCensus c;
    std::vector<char> seen(m.edges.size(), 0);
    auto walk = [&](int h) {
        int start_edge = m.halfedges[h].edge;
        for (;;) {
            seen[m.halfedges[h].edge] = 1;
            VertexKind k = m.vertices[m.head(h)].kind;
            if (k != VertexKind::DoublePoint && k != VertexKind::Anchor) return;
            h = straight_on(m, h);
            if (m.halfedges[h].edge == start_edge) return;
        }
    };
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        if (m.vertices[v].kind != VertexKind::Endpoint) continue;
        for (int h : m.vertices[v].rotation) {
            if (m.is_boundary(h) || seen[m.halfedges[h].edge]) continue;
            walk(h);
            ++c.interval_count;
        }
    }
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (seen[e] || m.edges[e].kind != EdgeKind::Divide) continue;
        walk(m.edges[e].half);
        ++c.circle_count;
    }
    return c;
}

bool divide_connected(const PlanarMap& m) {
    std::vector<int> parent(m.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool any = false;
    for (const auto& e : m.edges) {
        if (e.kind != EdgeKind::Divide) continue;
        any = true;
        parent[find(m.halfedges[e.half].origin)] = find(m.halfedges[m.halfedges[e.half].twin].origin);
    }
    if (!any) return false;
    int root = -1;
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        if (m.vertices[v].kind == VertexKind::Corner) continue;
        int r = find(static_cast<int>(v));
        if (root < 0) root = r;
        if (r != root) return false;
    }
    return true;
}

int Divide::internal_region_count() const {
    return static_cast<int>(std::count_if(regions.begin(), regions.end(), [](const Region& r) { return r.internal; }));
}

int Divide::double_point_count() const { return static_cast<int>(map.crossings.crossings.size()); }

Divide make_divide(PlanarMap m) {
    Divide d;
    d.regions = regions(m);
    d.strands = strand_census(m);
    d.connected = divide_connected(m);
    d.map = std::move(m);
    return d;
}

Divide make_divide(const StrandSet& s, Exec exec) { return make_divide(build_planar_map(s, exec)); }

int link_component_count(const Divide& d) { return d.strands.interval_count + 2 * d.strands.circle_count; }

int cusp_count(const Divide& d) {
    if (!d.connected) throw Error("disconnected", "cusp count needs a connected divide");
    if (d.double_point_count() == 0) throw Error("no-double-point", "cusp count needs at least one double point");
    return link_component_count(d) + d.internal_region_count();
}

bool face_internal(const Divide& d, int face) {
    for (const auto& r : d.regions)
        if (r.face == face) return r.internal;
    return false;
}

} // namespace divlink
