#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "divlink/diagram.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

using V3 = std::array<double, 3>;
using V4 = std::array<double, 4>;

double angle_of(const IVec& d) { return std::atan2(static_cast<double>(d.y), static_cast<double>(d.x)); }

// (x, theta) in the solid torus to the unit sphere in C^2. The square is
// sent radially onto the unit disk; over its boundary the theta circle
// collapses, which is where the lift closes up.
V4 to_sphere(double x, double y, double theta, double n) {
    const double r = std::max(std::abs(x), std::abs(y)) / n;
    const double len = std::hypot(x, y);
    const double ux = len > 0 ? x / len : 0, uy = len > 0 ? y / len : 0;
    const double s = std::sqrt(std::max(0.0, 1 - r * r));
    return {r * ux, r * uy, s * std::cos(theta), s * std::sin(theta)};
}

double dot4(const V4& a, const V4& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

double dist4(const V4& a, const V4& b) {
    double s = 0;
    for (int k = 0; k < 4; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

// Appends f(t) for t in [t0, t1), splitting until every chord midpoint is
// within `tol` of the curve.
template <class F>
void refine(const F& f, double t0, const V4& p0, double t1, const V4& p1, double tol, int depth, std::vector<V4>& out) {
    const double tm = 0.5 * (t0 + t1);
    const V4 pm = f(tm);
    V4 chord;
    for (int k = 0; k < 4; ++k) chord[k] = 0.5 * (p0[k] + p1[k]);
    if (depth < 24 && dist4(pm, chord) > tol) {
        refine(f, t0, p0, tm, pm, tol, depth + 1, out);
        refine(f, tm, pm, t1, p1, tol, depth + 1, out);
        return;
    }
    if (out.empty() || dist4(out.back(), p0) > 1e-12) out.push_back(p0);
}

template <class F>
void sample_piece(const F& f, int pieces, double tol, std::vector<V4>& out) {
    V4 prev = f(0.0);
    for (int k = 0; k < pieces; ++k) {
        const double t0 = static_cast<double>(k) / pieces, t1 = static_cast<double>(k + 1) / pieces;
        const V4 next = f(t1);
        refine(f, t0, prev, t1, next, tol, 0, out);
        prev = next;
    }
}

std::vector<std::vector<V4>> sample(const Lift3D& l, double tol) {
    const double n = static_cast<double>(l.source.boundary_half_width);
    std::vector<std::vector<V4>> out;
    for (const auto& c : l.components) {
        std::vector<V4> pts;
        for (const auto& p : c.pieces) {
            const double ax = p.a.x.get_d(), ay = p.a.y.get_d();
            switch (p.kind) {
            case LiftPiece::Kind::Sheet: {
                const double bx = p.b.x.get_d(), by = p.b.y.get_d(), th = angle_of(p.dir);
                sample_piece([&](double t) { return to_sphere(ax + t * (bx - ax), ay + t * (by - ay), th, n); }, 4, tol,
                             pts);
                break;
            }
            case LiftPiece::Kind::Turn: {
                const double th = angle_of(p.dir);
                double sweep = angle_of(p.to) - th;
                while (sweep * p.turn <= 0) sweep += p.turn * 2 * std::numbers::pi;
                sample_piece([&](double t) { return to_sphere(ax, ay, th + sweep * t, n); }, 8, tol, pts);
                break;
            }
            case LiftPiece::Kind::Binding: {
                const V4 q = to_sphere(ax, ay, angle_of(p.to), n);
                if (pts.empty() || dist4(pts.back(), q) > 1e-12) pts.push_back(q);
                break;
            }
            }
        }
        while (pts.size() > 1 && dist4(pts.back(), pts.front()) <= 1e-12) pts.pop_back();
        out.push_back(std::move(pts));
    }
    return out;
}

struct Segment2 {
    double ax, ay, az, bx, by, bz;
    int comp;
    double lo_x, hi_x, lo_y, hi_y;
};

// Signed crossing count between segments i and every later segment.
void count_row(const std::vector<Segment2>& s, std::size_t i, std::vector<long>& sums, int comps, bool& degenerate) {
    constexpr double tol = 1e-9;
    const Segment2& p = s[i];
    for (std::size_t j = i + 1; j < s.size(); ++j) {
        const Segment2& q = s[j];
        if (p.comp == q.comp) continue;
        if (p.hi_x < q.lo_x || q.hi_x < p.lo_x || p.hi_y < q.lo_y || q.hi_y < p.lo_y) continue;
        const double rx = p.bx - p.ax, ry = p.by - p.ay, sx = q.bx - q.ax, sy = q.by - q.ay;
        const double wx = q.ax - p.ax, wy = q.ay - p.ay;
        const double den = rx * sy - ry * sx;
        const double scale = std::hypot(rx, ry) * std::hypot(sx, sy);
        if (std::abs(den) <= tol * scale) {
            if (std::abs(wx * ry - wy * rx) <= tol * std::hypot(rx, ry) * (1 + std::hypot(wx, wy))) degenerate = true;
            continue;
        }
        const double t = (wx * sy - wy * sx) / den, u = (wx * ry - wy * rx) / den;
        if (t < -tol || t > 1 + tol || u < -tol || u > 1 + tol) continue;
        if (t < tol || t > 1 - tol || u < tol || u > 1 - tol) {
            degenerate = true;
            continue;
        }
        const double zp = p.az + t * (p.bz - p.az), zq = q.az + u * (q.bz - q.az);
        if (std::abs(zp - zq) <= tol) {
            degenerate = true;
            continue;
        }
        const bool p_over = zp > zq;
        const double c = p_over ? rx * sy - ry * sx : sx * ry - sy * rx;
        const int sign = c > 0 ? 1 : -1;
        sums[static_cast<std::size_t>(p.comp) * comps + q.comp] += sign;
    }
}

double point_segment_distance(double px, double py, const IPoint& a, const IPoint& b) {
    const double dx = static_cast<double>(b.x - a.x), dy = static_cast<double>(b.y - a.y);
    const double wx = px - static_cast<double>(a.x), wy = py - static_cast<double>(a.y);
    const double t = std::clamp((wx * dx + wy * dy) / (dx * dx + dy * dy), 0.0, 1.0);
    return std::hypot(wx - t * dx, wy - t * dy);
}

// Smallest separation of the lifted curves that the sampling must resolve:
// corners against other segments, and the two sheets over each crossing.
double feature_scale(const Lift3D& l) {
    const StrandSet& s = l.source;
    const double n = static_cast<double>(s.boundary_half_width);
    double best = 1.0;
    for (std::size_t i = 0; i < s.strands.size(); ++i) {
        const Strand& si = s.strands[i];
        for (std::size_t v = 0; v < si.points.size(); ++v) {
            const double px = static_cast<double>(si.points[v].x), py = static_cast<double>(si.points[v].y);
            for (std::size_t j = 0; j < s.strands.size(); ++j) {
                const Strand& sj = s.strands[j];
                for (std::size_t e = 0; e < sj.segment_count(); ++e) {
                    if (i == j && (e == v || (e + 1) % sj.points.size() == v)) continue;
                    best = std::min(best, point_segment_distance(px, py, sj.seg_start(e), sj.seg_end(e)) / n);
                }
            }
        }
    }
    for (const Crossing& c : intersect_strands(s, Exec::Serial).crossings) {
        const IVec u = s.strands[c.a.strand].seg_dir(c.a.segment), w = s.strands[c.b.strand].seg_dir(c.b.segment);
        const double x = c.position.x.get_d(), y = c.position.y.get_d();
        const double r = std::max(std::abs(x), std::abs(y)) / n;
        const double cross = std::abs(static_cast<double>(u.x) * w.y - static_cast<double>(u.y) * w.x) /
                             (std::hypot(u.x, u.y) * std::hypot(w.x, w.y));
        best = std::min(best, std::sqrt(std::max(0.0, 1 - r * r)) * cross);
    }
    return best;
}

// Linking matrix of the sampled curves, or nothing if 16 random
// projections all came out degenerate.
std::optional<IntMatrix> sampled_linking(const Lift3D& l, double tol, Exec exec) {
    const int comps = static_cast<int>(l.components.size());
    const auto curves = sample(l, tol);
    std::mt19937_64 rng(0x5eed1e55ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        // Pole of the stereographic projection and an orthonormal basis of its complement.
        V4 pole;
        for (double& v : pole) v = gauss(rng);
        const double pn = std::sqrt(dot4(pole, pole));
        for (double& v : pole) v /= pn;
        std::array<V4, 3> basis;
        int filled = 0;
        for (int axis = 0; axis < 4 && filled < 3; ++axis) {
            V4 e{};
            e[axis] = 1;
            V4 w = e;
            const double a = dot4(e, pole);
            for (int k = 0; k < 4; ++k) w[k] -= a * pole[k];
            for (int b = 0; b < filled; ++b) {
                const double c = dot4(w, basis[b]);
                for (int k = 0; k < 4; ++k) w[k] -= c * basis[b][k];
            }
            const double len = std::sqrt(dot4(w, w));
            if (len < 1e-6) continue;
            for (double& v : w) v /= len;
            basis[filled++] = w;
        }
        // Viewing direction and a frame for the picture plane.
        V3 view{gauss(rng), gauss(rng), gauss(rng)};
        const double vn = std::sqrt(view[0] * view[0] + view[1] * view[1] + view[2] * view[2]);
        for (double& v : view) v /= vn;
        V3 helper = std::abs(view[0]) < 0.9 ? V3{1, 0, 0} : V3{0, 1, 0};
        V3 e1{view[1] * helper[2] - view[2] * helper[1], view[2] * helper[0] - view[0] * helper[2],
              view[0] * helper[1] - view[1] * helper[0]};
        const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
        for (double& v : e1) v /= n1;
        const V3 e2{view[1] * e1[2] - view[2] * e1[1], view[2] * e1[0] - view[0] * e1[2],
                    view[0] * e1[1] - view[1] * e1[0]};

        bool pole_hit = false;
        std::vector<Segment2> segs;
        for (int c = 0; c < comps; ++c) {
            std::vector<V3> proj;
            for (const V4& q : curves[c]) {
                const double gap = 1 - dot4(q, pole);
                if (gap < 1e-6) pole_hit = true;
                V3 y{dot4(q, basis[0]) / gap, dot4(q, basis[1]) / gap, dot4(q, basis[2]) / gap};
                proj.push_back({y[0] * e1[0] + y[1] * e1[1] + y[2] * e1[2], y[0] * e2[0] + y[1] * e2[1] + y[2] * e2[2],
                                y[0] * view[0] + y[1] * view[1] + y[2] * view[2]});
            }
            for (std::size_t k = 0; k < proj.size(); ++k) {
                const V3& a = proj[k];
                const V3& b = proj[(k + 1) % proj.size()];
                segs.push_back({a[0], a[1], a[2], b[0], b[1], b[2], c, std::min(a[0], b[0]) - 1e-9,
                                std::max(a[0], b[0]) + 1e-9, std::min(a[1], b[1]) - 1e-9, std::max(a[1], b[1]) + 1e-9});
            }
        }
        if (pole_hit) continue;

        std::vector<long> sums(static_cast<std::size_t>(comps) * comps, 0);
        bool degenerate = false;
        const long count = static_cast<long>(segs.size());
        if (exec == Exec::Parallel) {
#pragma omp parallel
            {
                std::vector<long> local(sums.size(), 0);
                bool bad = false;
#pragma omp for schedule(dynamic, 64)
                for (long i = 0; i < count; ++i) count_row(segs, static_cast<std::size_t>(i), local, comps, bad);
#pragma omp critical
                {
                    for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += local[k];
                    degenerate = degenerate || bad;
                }
            }
        } else {
            for (long i = 0; i < count; ++i) count_row(segs, static_cast<std::size_t>(i), sums, comps, degenerate);
        }
        if (degenerate) continue;

        IntMatrix m(comps, std::vector<int>(comps, 0));
        bool odd = false;
        for (int a = 0; a < comps; ++a)
            for (int b = a + 1; b < comps; ++b) {
                const long total = sums[static_cast<std::size_t>(a) * comps + b] + sums[static_cast<std::size_t>(b) * comps + a];
                if (total % 2) odd = true;
                m[a][b] = m[b][a] = static_cast<int>(total / 2);
            }
        if (odd) continue;
        return m;
    }
    return std::nullopt;
}

} // namespace

IntMatrix gauss_linking_oracle(const Lift3D& l, Exec exec) {
    if (l.components.size() < 2) return {};
    std::optional<IntMatrix> previous;
    const double start = std::min(1.0 / 64, feature_scale(l) / 8);
    for (double tol = start; tol > start * 1e-4; tol /= 4) {
        std::optional<IntMatrix> m = sampled_linking(l, tol, exec);
        if (m && previous && *m == *previous) return *m;
        if (m) previous = std::move(m);
    }
    throw Error("perturbation", "the linking oracle did not stabilise under refinement");
}

} // namespace divlink
