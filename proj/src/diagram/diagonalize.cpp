#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>

#include "divlink/diagram.hpp"
#include "divlink/error.hpp"
#include "divlink/planar_map.hpp"

namespace divlink {
namespace {

constexpr std::array<IVec, 4> kDiagonals = {IVec{1, 1}, IVec{-1, 1}, IVec{-1, -1}, IVec{1, -1}};

std::int64_t round_q(const Q& v) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    Q frac = v - Q(f);
    if (frac >= Q(1, 2)) f += 1;
    return f.get_si();
}

// A grid point near `v` whose coordinates have an even sum, so that it can be
// reached from the scaled vertices by diagonal steps.
IPoint even_point_near(const QPoint& v) {
    IPoint p{round_q(v.x), round_q(v.y)};
    if ((p.x + p.y) % 2 != 0) {
        Q up = v.y - Q(static_cast<long>(p.y));
        p.y += up >= 0 ? 1 : -1;
    }
    return p;
}

// Preferred side of the path relative to the straight segment, measured
// along the minor axis: +1 above, -1 below, 0 nearest.
struct Sides {
    int first = 0;
    int second = 0;
};

// Diagonal steps from a to b. The minor coordinate wanders at most two units
// off the straight segment, on the requested side in each half.
void zigzag(std::vector<IPoint>& out, const IPoint& a, const IPoint& b, Sides sides) {
    const IVec v = b - a;
    if (v.x == 0 && v.y == 0) return;
    const bool x_major = std::abs(v.x) >= std::abs(v.y);
    const std::int64_t m = x_major ? std::abs(v.x) : std::abs(v.y);
    const std::int64_t minor = x_major ? v.y : v.x;
    const std::int64_t major_sign = (x_major ? v.x : v.y) > 0 ? 1 : -1;
    std::int64_t p = 0;
    for (std::int64_t k = 0; k < m; ++k) {
        const std::int64_t k1 = k + 1;
        const int side = 2 * k < m ? sides.first : sides.second;
        // Compare p' * m with k1 * minor, the exact ideal scaled by m.
        auto dev = [&](std::int64_t q) { return q * m - k1 * minor; };
        std::int64_t next;
        if (side > 0) {
            next = dev(p - 1) >= 0 ? p - 1 : p + 1;
        } else if (side < 0) {
            next = dev(p + 1) <= 0 ? p + 1 : p - 1;
        } else {
            next = std::abs(dev(p + 1)) <= std::abs(dev(p - 1)) ? p + 1 : p - 1;
        }
        if (std::abs(minor - next) > m - k1) next = next == p + 1 ? p - 1 : p + 1;
        p = next;
        const std::int64_t major = major_sign * k1;
        out.push_back(x_major ? IPoint{a.x + major, a.y + p} : IPoint{a.x + p, a.y + major});
    }
}

// Side of the minor axis that points to the right of travel direction v.
int right_side(const IVec& v) {
    const bool x_major = std::abs(v.x) >= std::abs(v.y);
    return x_major ? (v.x < 0 ? 1 : -1) : (v.y > 0 ? 1 : -1);
}

// Side keeping the path off the boundary side that p lies on.
int inside_side(const IPoint& p, const IVec& v, std::int64_t n) {
    const bool x_major = std::abs(v.x) >= std::abs(v.y);
    if (x_major) {
        if (p.y == n) return -1;
        if (p.y == -n) return 1;
    } else {
        if (p.x == n) return -1;
        if (p.x == -n) return 1;
    }
    return 0;
}

std::vector<IPoint> remove_collinear(const std::vector<IPoint>& pts, bool closed) {
    std::vector<IPoint> out;
    const std::size_t n = pts.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (!closed && (j == 0 || j + 1 == n)) {
            out.push_back(pts[j]);
            continue;
        }
        const IVec in = pts[j] - pts[(j + n - 1) % n], o = pts[(j + 1) % n] - pts[j];
        if (cross(in, o) != 0 || dot(in, o) < 0) out.push_back(pts[j]);
    }
    return out;
}

struct Passage {
    int crossing;
    int segment;
    Q t;
};

std::vector<std::vector<Passage>> passages(const StrandSet& s, const CrossingSet& cs) {
    std::vector<std::vector<Passage>> out(s.strands.size());
    for (int k = 0; k < static_cast<int>(cs.crossings.size()); ++k) {
        const auto& c = cs.crossings[k];
        out[c.a.strand].push_back({k, c.a.segment, c.a.t});
        out[c.b.strand].push_back({k, c.b.segment, c.b.t});
    }
    for (auto& p : out)
        std::sort(p.begin(), p.end(), [](const Passage& x, const Passage& y) {
            return x.segment != y.segment ? x.segment < y.segment : x.t < y.t;
        });
    return out;
}

// Diagonal directions for the two branches of each crossing, chosen so the
// four half-branches keep their cyclic order.
std::array<IVec, 2> crossing_directions(const IVec& da, const IVec& db) {
    std::array<IVec, 4> half = {da, db, -da, -db};
    std::array<IVec, 4> sorted = half;
    std::sort(sorted.begin(), sorted.end(), ccw_less);
    const int start = static_cast<int>(std::find(sorted.begin(), sorted.end(), da) - sorted.begin());
    std::array<IVec, 4> ring;
    for (int i = 0; i < 4; ++i) ring[i] = sorted[(start + i) % 4];
    int best = 0;
    double best_score = -1e300;
    for (int s = 0; s < 4; ++s) {
        double score = 0;
        for (int i = 0; i < 4; ++i) {
            const IVec& e = kDiagonals[(s + i) % 4];
            const double len = std::hypot(double(ring[i].x), double(ring[i].y));
            score += (double(ring[i].x) * e.x + double(ring[i].y) * e.y) / len;
        }
        if (score > best_score + 1e-12) {
            best_score = score;
            best = s;
        }
    }
    const int db_pos = ring[1] == db ? 1 : 3;
    return {kDiagonals[best], kDiagonals[(best + db_pos) % 4]};
}

struct Node {
    IPoint at;
    std::optional<IVec> stub; // crossing nodes: diagonal direction of travel
    int turn = 0;             // corner nodes: turn sign
};

std::optional<StrandSet> attempt(const StrandSet& s, const CrossingSet& cs, std::int64_t k) {
    const std::int64_t n = s.boundary_half_width * k;
    const std::int64_t stub = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::sqrt(static_cast<double>(k))));
    std::vector<std::array<IVec, 2>> dirs(cs.crossings.size());
    std::vector<IPoint> where(cs.crossings.size());
    for (std::size_t i = 0; i < cs.crossings.size(); ++i) {
        const auto& c = cs.crossings[i];
        dirs[i] = crossing_directions(primitive(s.strands[c.a.strand].seg_dir(c.a.segment)),
                                      primitive(s.strands[c.b.strand].seg_dir(c.b.segment)));
        where[i] = even_point_near(Q(static_cast<long>(k)) * c.position);
    }
    const auto pass = passages(s, cs);
    StrandSet out;
    out.boundary_half_width = n;
    for (int si = 0; si < static_cast<int>(s.strands.size()); ++si) {
        const Strand& st = s.strands[si];
        const bool closed = st.kind == StrandKind::Closed;
        const std::size_t segs = st.segment_count();
        std::vector<Node> nodes;
        std::size_t pi = 0;
        for (std::size_t j = 0; j <= segs; ++j) {
            if (j == segs && closed) break;
            const IPoint v = st.points[j % st.points.size()];
            Node corner{{v.x * k, v.y * k}, std::nullopt, 0};
            if (closed || (j > 0 && j < segs)) {
                const IVec in = st.seg_dir((j + segs - 1) % segs), o = st.seg_dir(j % segs);
                const __int128 c = cross(in, o);
                corner.turn = c > 0 ? 1 : (c < 0 ? -1 : 0);
            }
            nodes.push_back(corner);
            if (j == segs) break;
            for (; pi < pass[si].size() && pass[si][pi].segment == static_cast<int>(j); ++pi) {
                const auto& ps = pass[si][pi];
                const auto& c = cs.crossings[ps.crossing];
                const bool is_a = c.a.strand == si && c.a.segment == ps.segment && c.a.t == ps.t;
                const IVec orig = primitive(st.seg_dir(j));
                IVec e = dirs[ps.crossing][is_a ? 0 : 1];
                if (dot(e, orig) < 0) e = -e;
                nodes.push_back({where[ps.crossing], e, 0});
            }
        }
        // Expand nodes into waypoints; crossing nodes become short diagonal runs.
        struct Way {
            IPoint at;
            int side_out = 0; // preferred side for the path leaving this waypoint
            int side_in = 0;  // preferred side for the path arriving here
            bool fixed = false; // the following piece is a stub
        };
        std::vector<Way> ways;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const Node& nd = nodes[i];
            if (nd.stub) {
                const IVec e = *nd.stub;
                ways.push_back({{nd.at.x - stub * e.x, nd.at.y - stub * e.y}, 0, 0, true});
                ways.push_back({nd.at, 0, 0, true});
                ways.push_back({{nd.at.x + stub * e.x, nd.at.y + stub * e.y}, 0, 0, false});
            } else {
                ways.push_back({nd.at, 0, 0, false});
            }
        }
        std::vector<IPoint> pts;
        const std::size_t nw = ways.size();
        const std::size_t pieces = closed ? nw : nw - 1;
        if (!ways.empty()) pts.push_back(ways[0].at);
        for (std::size_t i = 0; i < pieces; ++i) {
            const Way& a = ways[i];
            const Way& b = ways[(i + 1) % nw];
            if (a.fixed) {
                if (!(a.at == b.at)) pts.push_back(b.at);
                continue;
            }
            const IVec v = b.at - a.at;
            Sides sides;
            auto side_at = [&](std::size_t w) {
                // Corner nodes keep the path on the outside of the turn.
                const IPoint& p = ways[w].at;
                if (!closed && (w == 0 || w + 1 == nw)) return inside_side(p, v, n);
                for (const Node& nd : nodes)
                    if (!nd.stub && nd.at == p && nd.turn != 0) return nd.turn > 0 ? right_side(v) : -right_side(v);
                return 0;
            };
            sides.first = side_at(i);
            sides.second = side_at((i + 1) % nw);
            zigzag(pts, a.at, b.at, sides);
        }
        if (closed && !pts.empty() && pts.back() == pts.front()) pts.pop_back();
        Strand ns;
        ns.kind = st.kind;
        ns.points = remove_collinear(pts, closed);
        out.strands.push_back(std::move(ns));
    }
    try {
        validate_strands(out);
        if (!same_divide_map(s, out, k)) return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return out;
}

bool crossings_on_grid(const CrossingSet& cs) {
    for (const auto& c : cs.crossings)
        if (c.position.x.get_den() != 1 || c.position.y.get_den() != 1) return false;
    return true;
}

// Position along the square's boundary, counterclockwise from (n, -n).
Q perimeter_parameter(const IPoint& p, std::int64_t n) {
    const Q x(static_cast<long>(p.x)), y(static_cast<long>(p.y)), nn(static_cast<long>(n));
    if (p.x == n && p.y > -n) return y + nn;
    if (p.y == n) return 2 * nn + (nn - x);
    if (p.x == -n) return 4 * nn + (nn - y);
    return 6 * nn + (x + nn);
}

struct MapSignature {
    std::vector<std::vector<int>> sequences;
    std::vector<int> signs;
    std::vector<std::pair<int, int>> endpoints;
};

// Crossing ids along each strand and per-crossing signs, with crossings
// renamed through `rename`.
MapSignature signature(const StrandSet& s, const CrossingSet& cs, const std::vector<int>& rename) {
    MapSignature sig;
    const auto pass = passages(s, cs);
    std::vector<std::vector<std::pair<int, IVec>>> seen(cs.crossings.size());
    for (int si = 0; si < static_cast<int>(s.strands.size()); ++si) {
        std::vector<int> seq;
        for (const auto& p : pass[si]) {
            seq.push_back(rename[p.crossing]);
            seen[p.crossing].push_back({si, s.strands[si].seg_dir(p.segment)});
        }
        sig.sequences.push_back(std::move(seq));
    }
    sig.signs.assign(cs.crossings.size(), 0);
    for (std::size_t i = 0; i < cs.crossings.size(); ++i) {
        const auto& two = seen[i];
        if (two.size() != 2) continue;
        const __int128 c = cross(two[0].second, two[1].second);
        sig.signs[rename[i]] = c > 0 ? 1 : -1;
    }
    std::vector<std::pair<Q, std::pair<int, int>>> ends;
    for (int si = 0; si < static_cast<int>(s.strands.size()); ++si) {
        const Strand& st = s.strands[si];
        if (st.kind != StrandKind::Open) continue;
        ends.push_back({perimeter_parameter(st.points.front(), s.boundary_half_width), {si, 0}});
        ends.push_back({perimeter_parameter(st.points.back(), s.boundary_half_width), {si, 1}});
    }
    std::sort(ends.begin(), ends.end());
    for (const auto& e : ends) sig.endpoints.push_back(e.second);
    return sig;
}

template <class T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t r = 0; r < b.size(); ++r)
        if (std::equal(a.begin(), a.end(), b.begin() + r, b.end()) &&
            std::equal(a.begin() + (b.size() - r), a.end(), b.begin()))
            return true;
    return false;
}

} // namespace

bool is_diagonal(const StrandSet& s) {
    for (const auto& st : s.strands)
        for (std::size_t j = 0; j < st.segment_count(); ++j) {
            const IVec d = st.seg_dir(j);
            if (std::abs(d.x) != std::abs(d.y)) return false;
        }
    return true;
}

bool same_divide_map(const StrandSet& a, const StrandSet& b, std::int64_t scale) {
    if (a.strands.size() != b.strands.size()) return false;
    for (std::size_t i = 0; i < a.strands.size(); ++i)
        if (a.strands[i].kind != b.strands[i].kind) return false;
    const CrossingSet ca = intersect_strands(a, Exec::Serial);
    const CrossingSet cb = intersect_strands(b, Exec::Serial);
    if (ca.crossings.size() != cb.crossings.size()) return false;
    // Match each crossing of b to the nearest scaled crossing of a.
    const Q k(static_cast<long>(scale));
    std::vector<int> rename_b(cb.crossings.size(), -1);
    std::vector<bool> used(ca.crossings.size(), false);
    for (std::size_t j = 0; j < cb.crossings.size(); ++j) {
        int best = -1;
        Q best_d = -1;
        for (std::size_t i = 0; i < ca.crossings.size(); ++i) {
            const QPoint d = cb.crossings[j].position - k * ca.crossings[i].position;
            const Q dd = d.x * d.x + d.y * d.y;
            if (best < 0 || dd < best_d) {
                best = static_cast<int>(i);
                best_d = dd;
            }
        }
        if (best < 0 || used[best]) return false;
        used[best] = true;
        rename_b[j] = best;
    }
    std::vector<int> identity(ca.crossings.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
    const MapSignature sa = signature(a, ca, identity), sb = signature(b, cb, rename_b);
    if (sa.signs != sb.signs) return false;
    for (std::size_t i = 0; i < a.strands.size(); ++i) {
        const bool closed = a.strands[i].kind == StrandKind::Closed;
        if (closed ? !cyclic_equal(sa.sequences[i], sb.sequences[i]) : sa.sequences[i] != sb.sequences[i]) return false;
    }
    return cyclic_equal(sa.endpoints, sb.endpoints);
}

DiagonalDivide diagonalize(const StrandSet& s) {
    validate_strands(s);
    const CrossingSet cs = intersect_strands(s, Exec::Serial);
    if (is_diagonal(s) && crossings_on_grid(cs)) return {s, 1};
    for (std::int64_t k = 2; k <= 4096; k *= 2) {
        if (s.boundary_half_width * k > kMaxCoordinate) break;
        if (auto out = attempt(s, cs, k)) return {std::move(*out), k};
    }
    throw Error("rectification-failure", "no slope +-1 redrawing preserves the divide map");
}

} // namespace divlink
