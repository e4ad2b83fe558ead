#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divlink/geometry.hpp"

namespace divlink {

// Coordinates are bounded so that every orientation predicate fits in 64 bits
// before promotion; crossing parameters are then exact GMP rationals.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 29;

enum class StrandKind { Open, Closed };

struct Strand {
    StrandKind kind = StrandKind::Open;
    std::vector<IPoint> points;

    std::size_t segment_count() const {
        return kind == StrandKind::Open ? points.size() - 1 : points.size();
    }
    const IPoint& seg_start(std::size_t j) const { return points[j]; }
    const IPoint& seg_end(std::size_t j) const { return points[(j + 1) % points.size()]; }
    IVec seg_dir(std::size_t j) const { return seg_end(j) - seg_start(j); }
};

// The disk is modelled by the square [-N, N]^2.
struct StrandSet {
    std::int64_t boundary_half_width = 0;
    std::vector<Strand> strands;

    bool on_boundary(const IPoint& p) const {
        std::int64_t n = boundary_half_width;
        return p.x == -n || p.x == n || p.y == -n || p.y == n;
    }
};

struct Branch {
    int strand = -1;
    int segment = -1;
    Q t; // parameter along the segment, strictly inside (0, 1)
};

struct Crossing {
    QPoint position;
    Branch a; // (strand, segment) of a is lexicographically smaller than that of b
    Branch b;
};

struct CrossingSet {
    std::vector<Crossing> crossings;
};

enum class Exec { Serial, Parallel };

// Parses the line-oriented divide format and validates every StrandSet
// invariant. Throws ParseError (with a line number) or Error.
StrandSet parse_divide(std::string_view text);

// Inverse of parse_divide, producing canonical text.
std::string format_divide(const StrandSet& s);

// Checks the StrandSet invariants of a programmatically built set.
void validate_strands(const StrandSet& s);

// All pairwise and self intersections, exact. Rejects tangencies, corner
// crossings and triple points. Both execution modes return identical output.
CrossingSet intersect_strands(const StrandSet& s, Exec exec = Exec::Parallel);

} // namespace divlink
