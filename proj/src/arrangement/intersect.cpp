#include <algorithm>
#include <optional>

#include "divlink/arrangement.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

struct Seg {
    int strand;
    int index;
    IPoint a;
    IPoint b;
    std::int64_t xmin, xmax, ymin, ymax;
};

std::vector<Seg> flatten(const StrandSet& s) {
    std::vector<Seg> out;
    for (std::size_t k = 0; k < s.strands.size(); ++k) {
        const Strand& st = s.strands[k];
        for (std::size_t j = 0; j < st.segment_count(); ++j) {
            IPoint a = st.seg_start(j), b = st.seg_end(j);
            out.push_back({static_cast<int>(k), static_cast<int>(j), a, b, std::min(a.x, b.x), std::max(a.x, b.x),
                           std::min(a.y, b.y), std::max(a.y, b.y)});
        }
    }
    return out;
}

bool adjacent(const StrandSet& s, const Seg& p, const Seg& q) {
    if (p.strand != q.strand) return false;
    const Strand& st = s.strands[p.strand];
    int n = static_cast<int>(st.segment_count());
    int d = std::abs(p.index - q.index);
    if (d == 1) return true;
    return st.kind == StrandKind::Closed && d == n - 1;
}

struct PairResult {
    enum Kind { None, Hit, Fail } kind = None;
    __int128 tn = 0, un = 0, den = 1;
    std::string code;
    std::string message;
};

std::string seg_name(const Seg& g) {
    return "strand " + std::to_string(g.strand) + " segment " + std::to_string(g.index) + " " + to_string(g.a) +
           "-" + to_string(g.b);
}

QPoint exact_point(const IPoint& a, const IVec& d, const Q& t) {
    return {Q(static_cast<long>(a.x)) + t * static_cast<long>(d.x), Q(static_cast<long>(a.y)) + t * static_cast<long>(d.y)};
}

Q make_q(__int128 num, __int128 den) {
    // Both fit in 64 bits thanks to kMaxCoordinate.
    Q q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

PairResult test_pair(const StrandSet& s, const Seg& p, const Seg& q) {
    PairResult r;
    if (p.xmax < q.xmin || q.xmax < p.xmin || p.ymax < q.ymin || q.ymax < p.ymin) return r;
    IVec d1 = p.b - p.a, d2 = q.b - q.a;
    if (adjacent(s, p, q)) {
        if (cross(d1, d2) == 0 && dot(d1, d2) < 0) {
            r.kind = PairResult::Fail;
            r.code = "tangency";
            r.message = "segments fold back onto each other: " + seg_name(p) + " and " + seg_name(q);
        }
        return r;
    }
    IVec w = q.a - p.a;
    __int128 den = cross(d1, d2);
    if (den == 0) {
        if (cross(w, d1) != 0) return r;
        __int128 s0 = dot(w, d1), s1 = dot(q.b - p.a, d1), len = dot(d1, d1);
        __int128 lo = std::min(s0, s1), hi = std::max(s0, s1);
        if (hi >= 0 && lo <= len) {
            r.kind = PairResult::Fail;
            r.code = "tangency";
            r.message = "collinear overlapping or touching segments: " + seg_name(p) + " and " + seg_name(q);
        }
        return r;
    }
    __int128 tn = cross(w, d2), un = cross(w, d1);
    if (den < 0) {
        den = -den;
        tn = -tn;
        un = -un;
    }
    if (tn < 0 || tn > den || un < 0 || un > den) return r;
    if (tn == 0 || tn == den || un == 0 || un == den) {
        QPoint at = exact_point(p.a, d1, make_q(tn, den));
        r.kind = PairResult::Fail;
        r.code = "corner-crossing";
        r.message = "strands meet at a polyline vertex " + to_string(at) + ": " + seg_name(p) + " and " + seg_name(q);
        return r;
    }
    r.kind = PairResult::Hit;
    r.tn = tn;
    r.un = un;
    r.den = den;
    return r;
}

Crossing make_crossing(const Seg& p, const Seg& q, const PairResult& r) {
    Crossing c;
    c.a = {p.strand, p.index, make_q(r.tn, r.den)};
    c.b = {q.strand, q.index, make_q(r.un, r.den)};
    c.position = exact_point(p.a, p.b - p.a, c.a.t);
    return c;
}

bool crossing_less(const Crossing& x, const Crossing& y) {
    auto key = [](const Branch& b) { return std::tie(b.strand, b.segment); };
    if (key(x.a) != key(y.a)) return key(x.a) < key(y.a);
    if (x.a.t != y.a.t) return x.a.t < y.a.t;
    if (key(x.b) != key(y.b)) return key(x.b) < key(y.b);
    return x.b.t < y.b.t;
}

void reject_triple_points(const CrossingSet& cs) {
    std::vector<const Crossing*> order;
    for (const auto& c : cs.crossings) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->position < y->position; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i]->position == order[i - 1]->position)
            throw Error("triple-point", "more than two branches pass through " + to_string(order[i]->position));
}

CrossingSet serial_kernel(const StrandSet& s, const std::vector<Seg>& segs) {
    CrossingSet out;
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            PairResult r = test_pair(s, segs[i], segs[j]);
            if (r.kind == PairResult::Fail) throw Error(r.code, r.message);
            if (r.kind == PairResult::Hit) out.crossings.push_back(make_crossing(segs[i], segs[j], r));
        }
    return out;
}

CrossingSet parallel_kernel(const StrandSet& s, const std::vector<Seg>& segs) {
    struct Hit {
        std::size_t i, j;
        PairResult r;
    };
    const long n = static_cast<long>(segs.size());
    std::vector<std::vector<Hit>> per_row(segs.size());
    // Row i only writes per_row[i]; GMP values are created after the loop.
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        for (long j = i + 1; j < n; ++j) {
            PairResult r = test_pair(s, segs[i], segs[j]);
            if (r.kind != PairResult::None) {
                per_row[i].push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(r)});
                if (per_row[i].back().r.kind == PairResult::Fail) break;
            }
        }
    }
    CrossingSet out;
    for (const auto& row : per_row)
        for (const auto& h : row) {
            if (h.r.kind == PairResult::Fail) throw Error(h.r.code, h.r.message);
            out.crossings.push_back(make_crossing(segs[h.i], segs[h.j], h.r));
        }
    return out;
}

} // namespace

CrossingSet intersect_strands(const StrandSet& s, Exec exec) {
    std::vector<Seg> segs = flatten(s);
    CrossingSet out = exec == Exec::Serial ? serial_kernel(s, segs) : parallel_kernel(s, segs);
    std::sort(out.crossings.begin(), out.crossings.end(), crossing_less);
    reject_triple_points(out);
    return out;
}

} // namespace divlink
