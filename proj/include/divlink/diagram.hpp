#pragma once

#include <array>
#include <string>
#include <vector>

#include "divlink/arrangement.hpp"
#include "divlink/divide_map.hpp"

namespace divlink {

// A divide whose segments all have slope +1 or -1, drawn on a grid refined
// by `scale` relative to the input.
struct DiagonalDivide {
    StrandSet strands;
    std::int64_t scale = 1;
};

DiagonalDivide diagonalize(const StrandSet& s);
bool is_diagonal(const StrandSet& s);

// True when the two strand sets have isomorphic divide maps: same crossing
// sequence along every strand (matched through positions after scaling the
// first set by `scale`), same crossing signs, same cyclic order of endpoints
// on the boundary.
bool same_divide_map(const StrandSet& a, const StrandSet& b, std::int64_t scale);

// The lift of a divide to the solid torus D x S^1 (with the circles over the
// boundary collapsed). A point (x, theta) carries the tangent direction
// theta at x; theta is stored as an exact direction vector.
struct LiftPiece {
    enum class Kind {
        Sheet,  // x runs from a to b at constant theta = dir
        Turn,   // x stays at a while theta turns from `dir` to `to`
        Binding // x = a on the boundary circle, where theta is immaterial
    };
    Kind kind = Kind::Sheet;
    QPoint a, b;
    IVec dir, to;
    int turn = 0; // Turn: +1 counterclockwise, -1 clockwise
};

struct LiftComponent {
    int strand = -1;
    int sheet = 0; // 0 forward, 1 backward; interval strands use both sheets in one component
    std::vector<LiftPiece> pieces;
};

struct Lift3D {
    StrandSet source;
    std::vector<LiftComponent> components;
};

Lift3D lift(const StrandSet& s);
Lift3D lift(const DiagonalDivide& d);

// Image of the lift under (x, theta) -> (x, theta + pi). Returns true when
// it maps the lift onto itself as a set of curves.
bool lift_is_invertible(const Lift3D& l);

struct PDCrossing {
    std::array<int, 4> arcs{}; // incoming under arc first, then counterclockwise
    int sign = 0;              // +1 right handed, -1 left handed
    int over_component = -1;
    int under_component = -1;
};

struct PDCode {
    std::vector<PDCrossing> crossings;
    int component_count = 0;
    // Per component, the crossings met in order as (crossing index, over).
    std::vector<std::vector<std::pair<int, bool>>> passages;
    std::vector<std::vector<int>> component_arcs;
    // Projection parameters that produced the code.
    std::string epsilon;
    int finger_count = 0;
};

PDCode project_pd(const Lift3D& l);

std::string pd_text(const PDCode& p);
std::string gauss_code_text(const PDCode& p);

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix linking_matrix(const PDCode& p);
IntMatrix gauss_linking_oracle(const Lift3D& l, Exec exec = Exec::Parallel);

// Equal, or equal after negating every entry.
bool equal_up_to_sign(const IntMatrix& a, const IntMatrix& b);

} // namespace divlink
