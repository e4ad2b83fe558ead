#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "divlink/divide_map.hpp"

namespace divlink {

enum class VertexType { T1, T2, T3, T4_1, T4_2, T5_1, T5_2, T5_3, T6_1, T6_2, T6_3, UNLISTED };

enum class Adjacency { NotApplicable, Opposite, Adjacent };

// Local picture at a double point. Index i runs counterclockwise: edge e_i
// is the i-th outgoing half-edge and quadrant q_i lies between e_i and e_{i+1},
// so e_i is flanked by q_{i-1} and q_i.
struct QuadrantProfile {
    int vertex = -1;
    std::array<int, 4> edges{};
    std::array<int, 4> faces{};
    std::array<bool, 4> external{};
    std::array<bool, 4> endpoint_edge{};
    int external_count = 0;
    int endpoint_edge_count = 0;
    Adjacency adjacency = Adjacency::NotApplicable;
};

struct TypeCensus {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0;
    std::map<VertexType, int> others;

    int total() const;
    int count(VertexType t) const;
    bool only_block_types() const { return others.empty(); }
    TypeCensus& operator+=(const TypeCensus& o);
    friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

struct PrimeCheck {
    bool ok = true;
    std::vector<int> offending_edges; // map edge ids
};

std::string type_name(VertexType t);  // "T4_2"
std::string type_label(VertexType t); // "4-2", as drawn next to vertices
VertexType type_from_name(const std::string& s);

QuadrantProfile quadrant_profile(const Divide& d, int vertex);
VertexType classify_vertex(const QuadrantProfile& p);

// Types of all double points, in crossing order.
std::vector<VertexType> vertex_types(const Divide& d);
TypeCensus census(const Divide& d);
TypeCensus census_of(const std::vector<VertexType>& types);
// Census of the closed-up polyhedron in which every region is kept and the
// ends of the divide are capped: every double point is then of type 1.
TypeCensus hatted_census(const Divide& d);

PrimeCheck prime_admissible(const Divide& d);
bool hopf_case(const TypeCensus& c);

// The types a prime-admissible divide can exhibit.
bool prime_type(VertexType t);
// The types that have a block decomposition.
bool block_type(VertexType t);

} // namespace divlink
