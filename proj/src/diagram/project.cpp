#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "divlink/diagram.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

// Height of a diagram segment over the disk. Theta levels carry an exact
// direction; bevels turn theta continuously around a corner point; finger
// legs sit just above or just below the cut page, nested by rank.
struct Level {
    enum class Kind { Bottom, Theta, Bevel, Top } kind = Kind::Theta;
    IVec dir{};
    QPoint center;
    int rank = 0;
};

Level theta(const IVec& d) { return {Level::Kind::Theta, d, {}, 0}; }
Level bevel(const QPoint& c) { return {Level::Kind::Bevel, {}, c, 0}; }
Level top(int rank) { return {Level::Kind::Top, {}, {}, rank}; }
Level bottom(int rank) { return {Level::Kind::Bottom, {}, {}, rank}; }

struct Seg {
    QPoint a, b;
    Level level;
    int comp = 0;
    int index = 0;
    bool finger = false;
    double lo_x, lo_y, hi_x, hi_y;
};

struct Params {
    Q eps;
    int first_ray = 0;
    IVec cut;
    std::vector<IPoint> finger_bases;
};

// Thrown when the chosen parameters put the projection in special position.
struct Degenerate {
    bool shrink; // the offset is too large for the geometry
    std::string why;
};

QPoint qv(const IVec& d) { return QPoint(d); }
QPoint perp(const IVec& d) { return {Q(-d.y), Q(d.x)}; }

QPoint line_meet(const QPoint& p, const QPoint& d, const QPoint& q, const QPoint& e) {
    Q t = qcross(q - p, e) / qcross(d, e);
    return p + t * d;
}

QPoint ray_exit(const QPoint& x, const IVec& r, std::int64_t n) {
    Q best = -1;
    auto consider = [&](const Q& s) {
        if (s > 0 && (best < 0 || s < best)) best = s;
    };
    if (r.x != 0) consider((Q(r.x > 0 ? n : -n) - x.x) / Q(r.x));
    if (r.y != 0) consider((Q(r.y > 0 ? n : -n) - x.y) / Q(r.y));
    return x + best * qv(r);
}

int qtheta_class(const QPoint& v) {
    if (v.y < 0) return 0;
    if (v.y == 0 && v.x > 0) return 1;
    if (v.y > 0) return 2;
    return 3;
}

// Compare angles in (-pi, pi].
int qtheta_compare(const QPoint& a, const QPoint& b) {
    int ca = qtheta_class(a), cb = qtheta_class(b);
    if (ca != cb) return ca < cb ? -1 : 1;
    int c = sgn(qcross(a, b));
    return -c;
}

QPoint theta_vector(const Level& l, const QPoint& q) {
    if (l.kind == Level::Kind::Theta) return qv(l.dir);
    QPoint r = q - l.center;
    return {r.y, -r.x};
}

int tier(const Level& l) {
    switch (l.kind) {
    case Level::Kind::Bottom: return 0;
    case Level::Kind::Theta:
    case Level::Kind::Bevel: return 1;
    case Level::Kind::Top: return 2;
    }
    return 1;
}

// +1 when l1 passes over l2 at q.
int compare_levels(const Level& l1, const Level& l2, const QPoint& q) {
    int t1 = tier(l1), t2 = tier(l2);
    if (t1 != t2) return t1 < t2 ? -1 : 1;
    if (t1 == 2) return l1.rank == l2.rank ? 0 : (l1.rank < l2.rank ? 1 : -1);
    if (t1 == 0) return l1.rank == l2.rank ? 0 : (l1.rank < l2.rank ? -1 : 1);
    return qtheta_compare(theta_vector(l1, q), theta_vector(l2, q));
}

bool passes_cut(const IVec& d1, const IVec& d2, int turn, const IVec& cut) {
    __int128 a = cross(d1, cut), b = cross(cut, d2);
    return turn > 0 ? (a > 0 && b > 0) : (a < 0 && b < 0);
}

const IVec kRays[] = {{7, 3}, {-5, 11}, {13, -4}, {-9, -7}, {3, 17}, {-17, 2}, {11, 13}, {-2, -15}};
constexpr int kRayCount = 8;

// Corners whose turn passes the cut; each of them gets a finger.
std::vector<IPoint> finger_bases(const Lift3D& l, const IVec& cut) {
    std::vector<IPoint> out;
    for (const auto& c : l.components)
        for (const auto& p : c.pieces)
            if (p.kind == LiftPiece::Kind::Turn && passes_cut(p.dir, p.to, p.turn, cut))
                out.push_back({p.a.x.get_num().get_si(), p.a.y.get_num().get_si()});
    return out;
}

// First ray, in the order fixed by the attempt, whose half-line from x misses
// every other finger base. Lattice points off that line are at least 1/|ray|
// away from it.
IVec finger_ray(const QPoint& x, const Params& prm) {
    const IPoint xi{x.x.get_num().get_si(), x.y.get_num().get_si()};
    for (int k = 0; k < kRayCount; ++k) {
        const IVec& r = kRays[(prm.first_ray + k) % kRayCount];
        bool clear = true;
        for (const IPoint& y : prm.finger_bases) {
            const IVec w = y - xi;
            if ((w.x != 0 || w.y != 0) && cross(w, r) == 0 && dot(w, r) > 0) {
                clear = false;
                break;
            }
        }
        if (clear) return r;
    }
    throw Degenerate{false, "every finger ray from a corner meets another finger base"};
}

struct Entry {
    QPoint point;
    Level level; // level of the segment that starts here
    bool finger = false;
};

std::vector<std::vector<Seg>> build(const Lift3D& l, const Params& prm, int& fingers) {
    const std::int64_t n = l.source.boundary_half_width;
    std::vector<std::vector<Seg>> out;
    fingers = 0;
    for (int ci = 0; ci < static_cast<int>(l.components.size()); ++ci) {
        const auto& pieces = l.components[ci].pieces;
        const int np = static_cast<int>(pieces.size());
        const long share = 4 * static_cast<long>(l.components.size());
        const Q eps = prm.eps * Q(share + ci, share);
        std::vector<Entry> entries;
        // Start point of each sheet, fixed by the connector before it.
        std::map<int, QPoint> sheet_start;
        std::map<int, std::vector<Entry>> after;
        for (int i = 0; i < np; ++i) {
            const LiftPiece& c = pieces[i];
            if (c.kind == LiftPiece::Kind::Sheet) continue;
            const int prev = (i + np - 1) % np, next = (i + 1) % np;
            if (pieces[prev].kind != LiftPiece::Kind::Sheet || pieces[next].kind != LiftPiece::Kind::Sheet)
                throw Error("internal", "lift pieces do not alternate");
            const IVec d1 = pieces[prev].dir, d2 = pieces[next].dir;
            const QPoint& x = c.a;
            std::vector<Entry> items;
            if (c.kind == LiftPiece::Kind::Binding) {
                Q worst = 0;
                const IPoint xi{x.x.get_num().get_si(), x.y.get_num().get_si()};
                const IVec normals[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                for (const IVec& nv : normals) {
                    bool on = (nv.x == 1 && xi.x == n) || (nv.x == -1 && xi.x == -n) || (nv.y == 1 && xi.y == n) ||
                              (nv.y == -1 && xi.y == -n);
                    if (!on) continue;
                    Q nd = Q(static_cast<long>(dot(nv, d1)));
                    if (nd <= 0) throw Error("internal", "strand does not leave through the boundary");
                    Q need = Q(std::abs(d1.x) + std::abs(d1.y) + 1) / nd;
                    if (need > worst) worst = need;
                }
                const Q mu = eps * worst;
                const QPoint t_in = x - mu * qv(d1) + eps * perp(d1);
                const QPoint t_out = x - mu * qv(d1) - eps * perp(d1);
                items.push_back({t_in, theta(d1)});
                items.push_back({x, theta(d2)});
                sheet_start[next] = t_out;
            } else {
                const QPoint off1 = x + eps * perp(d1), off2 = x + eps * perp(d2);
                const bool pass = passes_cut(d1, d2, c.turn, prm.cut);
                if (c.turn > 0) {
                    const QPoint m = line_meet(off1, qv(d1), off2, qv(d2));
                    if (!pass) {
                        sheet_start[next] = m;
                    } else {
                        const QPoint b = ray_exit(x, finger_ray(x, prm), n);
                        items.push_back({m - eps * qv(d1), top(fingers), true});
                        items.push_back({b, bottom(fingers), true});
                        sheet_start[next] = m + eps * qv(d2);
                        ++fingers;
                    }
                } else {
                    if (!pass) {
                        items.push_back({off1, bevel(x)});
                    } else {
                        const QPoint b = ray_exit(x, finger_ray(x, prm), n);
                        items.push_back({off1, bottom(fingers), true});
                        items.push_back({b, top(fingers), true});
                        ++fingers;
                    }
                    sheet_start[next] = off2;
                }
            }
            after[prev] = std::move(items);
        }
        for (int i = 0; i < np; ++i) {
            if (pieces[i].kind != LiftPiece::Kind::Sheet) continue;
            entries.push_back({sheet_start.at(i), theta(pieces[i].dir)});
            const auto& items = after[i];
            const QPoint& end = items.empty() ? sheet_start.at((i + 2) % np) : items.front().point;
            QPoint run = end - sheet_start.at(i);
            QPoint d = qv(pieces[i].dir);
            if (qcross(run, d) != 0 || run.x * d.x + run.y * d.y <= 0)
                throw Degenerate{true, "offset sheet reverses"};
            for (const auto& e : items) entries.push_back(e);
        }
        std::vector<Seg> segs;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            Seg s;
            s.a = entries[k].point;
            s.b = entries[(k + 1) % entries.size()].point;
            if (s.a == s.b) throw Degenerate{true, "zero-length diagram segment"};
            s.level = entries[k].level;
            s.finger = entries[k].finger;
            s.comp = ci;
            s.index = static_cast<int>(k);
            double ax = s.a.x.get_d(), ay = s.a.y.get_d(), bx = s.b.x.get_d(), by = s.b.y.get_d();
            s.lo_x = std::min(ax, bx) - 1e-9;
            s.hi_x = std::max(ax, bx) + 1e-9;
            s.lo_y = std::min(ay, by) - 1e-9;
            s.hi_y = std::max(ay, by) + 1e-9;
            segs.push_back(std::move(s));
        }
        out.push_back(std::move(segs));
    }
    return out;
}

struct DiagramCrossing {
    const Seg* s1;
    const Seg* s2;
    Q t1, t2;
    QPoint at;
    bool s1_over;
};

std::vector<DiagramCrossing> find_crossings(const std::vector<std::vector<Seg>>& comps) {
    std::vector<const Seg*> all;
    for (const auto& c : comps)
        for (const auto& s : c) all.push_back(&s);
    std::vector<DiagramCrossing> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const Seg& p = *all[i];
            const Seg& q = *all[j];
            if (p.hi_x < q.lo_x || q.hi_x < p.lo_x || p.hi_y < q.lo_y || q.hi_y < p.lo_y) continue;
            if (p.comp == q.comp) {
                const int len = static_cast<int>(comps[p.comp].size());
                const int diff = std::abs(p.index - q.index);
                if (diff == 1 || diff == len - 1) continue;
            }
            const QPoint r = p.b - p.a, s = q.b - q.a, w = q.a - p.a;
            const Q den = qcross(r, s);
            if (den == 0) {
                if (qcross(w, r) != 0) continue;
                const Q rr = r.x * r.x + r.y * r.y;
                Q t0 = (w.x * r.x + w.y * r.y) / rr;
                Q t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
                if (t0 > t1) std::swap(t0, t1);
                if (t1 < 0 || t0 > 1) continue;
                throw Degenerate{false, "collinear diagram segments overlap"};
            }
            const Q t = qcross(w, s) / den, u = qcross(w, r) / den;
            if (t < 0 || t > 1 || u < 0 || u > 1) continue;
            if (t == 0 || t == 1 || u == 0 || u == 1) throw Degenerate{false, "diagram crossing at a vertex"};
            QPoint at = p.a + t * r;
            int c = compare_levels(p.level, q.level, at);
            if (c == 0) throw Degenerate{false, "two arcs at equal theta over a crossing"};
            out.push_back({&p, &q, t, u, at, c > 0});
        }
    }
    return out;
}

double length(const IVec& d) { return std::hypot(static_cast<double>(d.x), static_cast<double>(d.y)); }

double dist_point_segment(double px, double py, double ax, double ay, double bx, double by) {
    double rx = bx - ax, ry = by - ay;
    double t = ((px - ax) * rx + (py - ay) * ry) / (rx * rx + ry * ry);
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - ax - t * rx, py - ay - t * ry);
}

// A power of two small enough that the offset picture stays inside the
// neighbourhoods of the divide's features.
Q initial_epsilon(const StrandSet& s, const CrossingSet& cs) {
    struct P {
        double x, y;
        int strand, seg1, seg2; // segments the point lies on
    };
    std::vector<P> pts;
    struct S {
        double ax, ay, bx, by;
        int strand, seg;
        IVec d;
    };
    std::vector<S> segs;
    double factor = 1;
    for (int k = 0; k < static_cast<int>(s.strands.size()); ++k) {
        const Strand& st = s.strands[k];
        const int ns = static_cast<int>(st.segment_count());
        const int np = static_cast<int>(st.points.size());
        for (int j = 0; j < ns; ++j) {
            const IPoint a = st.seg_start(j), b = st.seg_end(j);
            segs.push_back({double(a.x), double(a.y), double(b.x), double(b.y), k, j, primitive(b - a)});
        }
        for (int j = 0; j < np; ++j) {
            int before = st.kind == StrandKind::Open ? j - 1 : (j + ns - 1) % ns;
            int after = (st.kind == StrandKind::Open && j == np - 1) ? -1 : j;
            pts.push_back({double(st.points[j].x), double(st.points[j].y), k, before, after});
        }
        for (int j = 0; j < ns; ++j) {
            IVec d = primitive(st.seg_dir(j));
            factor = std::max(factor, 4 * (std::abs(d.x) + std::abs(d.y) + 1.0) * length(d));
            int nj = st.kind == StrandKind::Open ? j + 1 : (j + 1) % ns;
            if (nj >= ns) continue;
            IVec e = primitive(st.seg_dir(nj));
            double c = std::abs(static_cast<double>(cross(d, e)));
            if (c == 0) continue;
            double dd = length(d), de = length(e);
            factor = std::max(factor, (dd + de) * dd * de / c + dd + de);
        }
    }
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> on;
    for (const auto& c : cs.crossings) {
        IVec da = primitive(s.strands[c.a.strand].seg_dir(c.a.segment));
        IVec db = primitive(s.strands[c.b.strand].seg_dir(c.b.segment));
        double dd = length(da), de = length(db);
        factor = std::max(factor, 4 * (dd + de) * dd * de / std::abs(static_cast<double>(cross(da, db))));
        pts.push_back({c.position.x.get_d(), c.position.y.get_d(), -1, -1, -1});
        on.push_back({{c.a.strand, c.a.segment}, {c.b.strand, c.b.segment}});
    }
    double min_dist = 1e300;
    for (const auto& g : segs) min_dist = std::min(min_dist, std::hypot(g.bx - g.ax, g.by - g.ay));
    const std::size_t strand_points = pts.size() - cs.crossings.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const P& p = pts[i];
        for (const auto& g : segs) {
            if (i < strand_points) {
                if (g.strand == p.strand && (g.seg == p.seg1 || g.seg == p.seg2)) continue;
            } else {
                const auto& o = on[i - strand_points];
                if (std::make_pair(g.strand, g.seg) == o.first || std::make_pair(g.strand, g.seg) == o.second) continue;
            }
            min_dist = std::min(min_dist, dist_point_segment(p.x, p.y, g.ax, g.ay, g.bx, g.by));
        }
    }
    for (std::size_t i = strand_points; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            min_dist = std::min(min_dist, std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y));
    // A finger line passes other finger bases at distance 1/|ray| or more.
    min_dist = std::min(min_dist, 1.0 / 18);
    double target = min_dist / (8 * factor);
    int e = 2;
    while (std::ldexp(1.0, -e) > target && e < 200) ++e;
    mpz_class den = 1;
    den <<= e;
    return Q(1, den);
}

PDCode assemble(const Lift3D& l, const std::vector<std::vector<Seg>>& comps, const std::vector<DiagramCrossing>& xs) {
    PDCode pd;
    pd.component_count = static_cast<int>(comps.size());
    struct Pass {
        int seg;
        Q t;
        int crossing;
        bool over;
    };
    std::vector<std::vector<Pass>> passes(comps.size());
    for (int k = 0; k < static_cast<int>(xs.size()); ++k) {
        const auto& x = xs[k];
        passes[x.s1->comp].push_back({x.s1->index, x.t1, k, x.s1_over});
        passes[x.s2->comp].push_back({x.s2->index, x.t2, k, !x.s1_over});
    }
    for (auto& p : passes)
        std::sort(p.begin(), p.end(), [](const Pass& a, const Pass& b) { return a.seg != b.seg ? a.seg < b.seg : a.t < b.t; });

    // Number crossings in order of first appearance along the components.
    std::vector<int> renumber(xs.size(), -1);
    int next = 0;
    for (const auto& p : passes)
        for (const auto& q : p)
            if (renumber[q.crossing] < 0) renumber[q.crossing] = next++;

    std::vector<std::array<int, 2>> under_at(xs.size()), over_at(xs.size()); // (component, position)
    int label = 1;
    std::vector<int> base(comps.size());
    pd.passages.resize(comps.size());
    pd.component_arcs.resize(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        base[c] = label;
        for (std::size_t k = 0; k < passes[c].size(); ++k) {
            const Pass& q = passes[c][k];
            (q.over ? over_at : under_at)[q.crossing] = {static_cast<int>(c), static_cast<int>(k)};
            pd.passages[c].push_back({renumber[q.crossing], q.over});
            pd.component_arcs[c].push_back(label++);
        }
    }
    auto arc_in = [&](const std::array<int, 2>& at) {
        const int m = static_cast<int>(passes[at[0]].size());
        return base[at[0]] + (at[1] + m - 1) % m;
    };
    auto arc_out = [&](const std::array<int, 2>& at) { return base[at[0]] + at[1]; };
    pd.crossings.resize(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto& x = xs[k];
        const Seg& over = x.s1_over ? *x.s1 : *x.s2;
        const Seg& under = x.s1_over ? *x.s2 : *x.s1;
        const QPoint u = under.b - under.a, o = over.b - over.a;
        PDCrossing pc;
        const int ui = arc_in(under_at[k]), uo = arc_out(under_at[k]);
        const int oi = arc_in(over_at[k]), oo = arc_out(over_at[k]);
        const bool over_out_next = qcross(QPoint{-u.x, -u.y}, o) > 0;
        pc.arcs = {ui, over_out_next ? oo : oi, uo, over_out_next ? oi : oo};
        pc.sign = sgn(qcross(o, u));
        pc.over_component = over.comp;
        pc.under_component = under.comp;
        pd.crossings[renumber[k]] = pc;
    }
    (void)l;
    return pd;
}

} // namespace

PDCode project_pd(const Lift3D& l) {
    const CrossingSet cs = intersect_strands(l.source, Exec::Serial);
    const std::size_t expected = 4 * cs.crossings.size();
    const std::int64_t n = l.source.boundary_half_width;
    Params prm;
    prm.cut = {-(2 * n + 1), -1};
    prm.finger_bases = finger_bases(l, prm.cut);
    Q eps = initial_epsilon(l.source, cs);
    std::string last = "no attempt";
    for (int shrink = 0; shrink < 12; ++shrink, eps /= 2) {
        prm.eps = eps;
        bool smaller = false;
        for (int first = 0; first < kRayCount; ++first) {
            prm.first_ray = first;
            try {
                int fingers = 0;
                auto comps = build(l, prm, fingers);
                auto xs = find_crossings(comps);
                std::size_t plain = 0;
                for (const auto& x : xs) plain += !x.s1->finger && !x.s2->finger;
                if (plain != expected) throw Degenerate{true, "offset sheets cross away from the double points"};
                PDCode pd = assemble(l, comps, xs);
                pd.epsilon = eps.get_str();
                pd.finger_count = fingers;
                return pd;
            } catch (const Degenerate& d) {
                last = d.why;
                if (d.shrink) {
                    smaller = true;
                    break;
                }
            }
        }
        (void)smaller;
    }
    throw Error("perturbation", "could not put the projection in general position: " + last);
}

std::string pd_text(const PDCode& p) {
    std::ostringstream out;
    out << "PD[";
    for (std::size_t k = 0; k < p.crossings.size(); ++k) {
        const auto& a = p.crossings[k].arcs;
        out << (k ? ", " : "") << "X(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
    }
    out << "]";
    return out.str();
}

std::string gauss_code_text(const PDCode& p) {
    std::ostringstream out;
    out << "Gauss[";
    for (std::size_t c = 0; c < p.passages.size(); ++c) {
        out << (c ? ", " : "") << "{";
        for (std::size_t k = 0; k < p.passages[c].size(); ++k) {
            const auto& [x, over] = p.passages[c][k];
            out << (k ? ", " : "") << (over ? "" : "-") << (x + 1);
        }
        out << "}";
    }
    out << "] Signs[";
    for (std::size_t k = 0; k < p.crossings.size(); ++k) out << (k ? ", " : "") << (p.crossings[k].sign > 0 ? "+1" : "-1");
    out << "]";
    return out.str();
}

IntMatrix linking_matrix(const PDCode& p) {
    if (p.component_count < 2) return {};
    IntMatrix m(p.component_count, std::vector<int>(p.component_count, 0));
    for (const auto& x : p.crossings) {
        if (x.over_component == x.under_component) continue;
        m[x.over_component][x.under_component] += x.sign;
        m[x.under_component][x.over_component] += x.sign;
    }
    for (auto& row : m)
        for (int& v : row) {
            if (v % 2) throw Error("internal", "odd crossing sum between two components");
            v /= 2;
        }
    return m;
}

bool equal_up_to_sign(const IntMatrix& a, const IntMatrix& b) {
    if (a == b) return true;
    IntMatrix neg = b;
    for (auto& row : neg)
        for (int& v : row) v = -v;
    return a == neg;
}

} // namespace divlink
