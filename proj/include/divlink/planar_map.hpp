#pragma once

#include <vector>

#include "divlink/arrangement.hpp"

namespace divlink {

// Anchor vertices only appear on closed strands without crossings, so that
// every edge of the map has endpoints.
enum class VertexKind { DoublePoint, Endpoint, Corner, Anchor };
enum class EdgeKind { Divide, Boundary };

struct MapVertex {
    VertexKind kind = VertexKind::Corner;
    QPoint position;
    std::vector<int> rotation; // outgoing half-edges, counterclockwise
};

struct HalfEdge {
    int origin = -1;
    int twin = -1;
    int next = -1; // next half-edge along the face on the left
    int edge = -1;
    int face = -1;
    IVec direction; // primitive direction of the first piece leaving the origin
};

struct MapEdge {
    EdgeKind kind = EdgeKind::Divide;
    int strand = -1;           // divide edges only
    int half = -1;             // the half-edge that runs along `geometry`
    std::vector<QPoint> geometry; // polyline from origin(half) to origin(twin(half))
};

struct MapFace {
    std::vector<int> cycles; // one representative half-edge per boundary cycle
    bool outside = false;    // the unbounded face outside the square
};

struct PlanarMap {
    StrandSet strands;
    CrossingSet crossings;
    std::vector<MapVertex> vertices;
    std::vector<HalfEdge> halfedges;
    std::vector<MapEdge> edges;
    std::vector<MapFace> faces;
    std::vector<int> crossing_vertex; // crossing index -> vertex id
    int outside_face = -1;

    int head(int h) const { return halfedges[halfedges[h].twin].origin; }
    bool is_boundary(int h) const { return edges[halfedges[h].edge].kind == EdgeKind::Boundary; }
    int degree(int v) const { return static_cast<int>(vertices[v].rotation.size()); }
    // Geometry of half-edge h in its own direction of travel.
    std::vector<QPoint> path(int h) const;
    int graph_components() const;
    int euler_characteristic() const {
        return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
    }
};

PlanarMap build_planar_map(const StrandSet& s, const CrossingSet& c);

// Convenience: parse-free pipeline from a validated StrandSet.
PlanarMap build_planar_map(const StrandSet& s, Exec exec = Exec::Parallel);

} // namespace divlink
