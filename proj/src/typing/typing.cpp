#include "divlink/typing.hpp"
#include "divlink/error.hpp"

namespace divlink {

std::string type_name(VertexType t) {
    switch (t) {
    case VertexType::T1: return "T1";
    case VertexType::T2: return "T2";
    case VertexType::T3: return "T3";
    case VertexType::T4_1: return "T4_1";
    case VertexType::T4_2: return "T4_2";
    case VertexType::T5_1: return "T5_1";
    case VertexType::T5_2: return "T5_2";
    case VertexType::T5_3: return "T5_3";
    case VertexType::T6_1: return "T6_1";
    case VertexType::T6_2: return "T6_2";
    case VertexType::T6_3: return "T6_3";
    case VertexType::UNLISTED: return "UNLISTED";
    }
    return "UNLISTED";
}

std::string type_label(VertexType t) {
    std::string n = type_name(t);
    if (t == VertexType::UNLISTED) return "?";
    std::string s = n.substr(1);
    if (auto u = s.find('_'); u != std::string::npos) s[u] = '-';
    return s;
}

VertexType type_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(VertexType::UNLISTED); ++i)
        if (type_name(static_cast<VertexType>(i)) == s) return static_cast<VertexType>(i);
    throw Error("bad-type", "unknown vertex type " + s);
}

int TypeCensus::total() const {
    int t = n1 + n2 + n3 + n4 + n5;
    for (const auto& [k, v] : others) t += v;
    return t;
}

int TypeCensus::count(VertexType t) const {
    switch (t) {
    case VertexType::T1: return n1;
    case VertexType::T2: return n2;
    case VertexType::T3: return n3;
    case VertexType::T4_2: return n4;
    case VertexType::T5_3: return n5;
    default: {
        auto it = others.find(t);
        return it == others.end() ? 0 : it->second;
    }
    }
}

TypeCensus& TypeCensus::operator+=(const TypeCensus& o) {
    n1 += o.n1;
    n2 += o.n2;
    n3 += o.n3;
    n4 += o.n4;
    n5 += o.n5;
    for (const auto& [k, v] : o.others) others[k] += v;
    return *this;
}

QuadrantProfile quadrant_profile(const Divide& d, int vertex) {
    const PlanarMap& m = d.map;
    if (m.vertices[vertex].kind != VertexKind::DoublePoint || m.degree(vertex) != 4)
        throw Error("not-double-point", "vertex " + std::to_string(vertex) + " is not a double point");
    QuadrantProfile p;
    p.vertex = vertex;
    for (int i = 0; i < 4; ++i) {
        int h = m.vertices[vertex].rotation[i];
        p.edges[i] = h;
        p.faces[i] = m.halfedges[h].face;
        p.external[i] = !face_internal(d, p.faces[i]);
        p.endpoint_edge[i] = m.vertices[m.head(h)].kind == VertexKind::Endpoint;
        p.external_count += p.external[i];
        p.endpoint_edge_count += p.endpoint_edge[i];
    }
    for (int i = 0; i < 4; ++i)
        if (p.endpoint_edge[i] && !(p.external[i] && p.external[(i + 3) % 4]))
            throw Error("internal", "edge to an endpoint flanked by an internal region");
    if (p.external_count == 2) {
        int a = -1, b = -1;
        for (int i = 0; i < 4; ++i)
            if (p.external[i]) (a < 0 ? a : b) = i;
        p.adjacency = (b - a == 2) ? Adjacency::Opposite : Adjacency::Adjacent;
    }
    return p;
}

VertexType classify_vertex(const QuadrantProfile& p) {
    const int k = p.endpoint_edge_count;
    switch (p.external_count) {
    case 0: return k == 0 ? VertexType::T1 : VertexType::UNLISTED;
    case 1: return k == 0 ? VertexType::T2 : VertexType::UNLISTED;
    case 2:
        if (p.adjacency == Adjacency::Opposite) return k == 0 ? VertexType::T3 : VertexType::UNLISTED;
        if (k == 0) return VertexType::T4_1;
        if (k == 1) return VertexType::T4_2;
        return VertexType::UNLISTED;
    case 3:
        if (k == 0) return VertexType::T5_1;
        if (k == 1) return VertexType::T5_2;
        if (k == 2) return VertexType::T5_3;
        return VertexType::UNLISTED;
    case 4:
        if (k == 0) return VertexType::T6_1;
        if (k == 2) return VertexType::T6_2;
        if (k == 4) return VertexType::T6_3;
        return VertexType::UNLISTED;
    }
    return VertexType::UNLISTED;
}

std::vector<VertexType> vertex_types(const Divide& d) {
    std::vector<VertexType> out;
    for (int v : d.map.crossing_vertex) out.push_back(classify_vertex(quadrant_profile(d, v)));
    return out;
}

TypeCensus census_of(const std::vector<VertexType>& types) {
    TypeCensus c;
    for (VertexType t : types) {
        switch (t) {
        case VertexType::T1: ++c.n1; break;
        case VertexType::T2: ++c.n2; break;
        case VertexType::T3: ++c.n3; break;
        case VertexType::T4_2: ++c.n4; break;
        case VertexType::T5_3: ++c.n5; break;
        default: ++c.others[t];
        }
    }
    return c;
}

TypeCensus census(const Divide& d) { return census_of(vertex_types(d)); }

TypeCensus hatted_census(const Divide& d) {
    TypeCensus c;
    c.n1 = d.double_point_count();
    return c;
}

PrimeCheck prime_admissible(const Divide& d) {
    if (!d.connected) throw Error("disconnected", "prime admissibility needs a connected divide");
    const PlanarMap& m = d.map;
    PrimeCheck r;
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
        if (m.edges[e].kind != EdgeKind::Divide) continue;
        int h = m.edges[e].half, t = m.halfedges[h].twin;
        if (m.vertices[m.halfedges[h].origin].kind != VertexKind::DoublePoint) continue;
        if (m.vertices[m.halfedges[t].origin].kind != VertexKind::DoublePoint) continue;
        if (face_internal(d, m.halfedges[h].face) || face_internal(d, m.halfedges[t].face)) continue;
        r.ok = false;
        r.offending_edges.push_back(static_cast<int>(e));
    }
    return r;
}

bool hopf_case(const TypeCensus& c) {
    if (c.count(VertexType::T6_3) == 0) return false;
    if (c.total() != 1)
        throw Error("internal", "a connected divide with a type 6-3 double point must have exactly one double point");
    return true;
}

bool block_type(VertexType t) {
    return t == VertexType::T1 || t == VertexType::T2 || t == VertexType::T3 || t == VertexType::T4_2 ||
           t == VertexType::T5_3;
}

bool prime_type(VertexType t) { return block_type(t) || t == VertexType::T6_3; }

} // namespace divlink
