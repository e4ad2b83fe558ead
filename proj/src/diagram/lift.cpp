#include <algorithm>
#include <map>

#include "divlink/diagram.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

// Polyline with collinear interior points removed; directions are primitive.
struct Path {
    std::vector<IPoint> points;
    std::vector<IVec> dirs; // dirs[j] runs from points[j] to points[j + 1] (cyclically when closed)
};

Path simplify(const Strand& st) {
    Path p;
    const std::size_t n = st.points.size();
    const bool closed = st.kind == StrandKind::Closed;
    for (std::size_t j = 0; j < n; ++j) {
        if (!closed && (j == 0 || j + 1 == n)) {
            p.points.push_back(st.points[j]);
            continue;
        }
        IVec in = primitive(st.points[j] - st.points[(j + n - 1) % n]);
        IVec out = primitive(st.points[(j + 1) % n] - st.points[j]);
        if (!(in == out)) p.points.push_back(st.points[j]);
    }
    const std::size_t m = p.points.size();
    const std::size_t segs = closed ? m : m - 1;
    for (std::size_t j = 0; j < segs; ++j) p.dirs.push_back(primitive(p.points[(j + 1) % m] - p.points[j]));
    return p;
}

int turn_sign(const IVec& a, const IVec& b) {
    __int128 c = cross(a, b);
    return c > 0 ? 1 : (c < 0 ? -1 : 0);
}

LiftPiece sheet(const IPoint& a, const IPoint& b, const IVec& d) {
    LiftPiece p;
    p.kind = LiftPiece::Kind::Sheet;
    p.a = QPoint(a);
    p.b = QPoint(b);
    p.dir = p.to = d;
    return p;
}

LiftPiece turn(const IPoint& x, const IVec& from, const IVec& to) {
    LiftPiece p;
    p.kind = LiftPiece::Kind::Turn;
    p.a = p.b = QPoint(x);
    p.dir = from;
    p.to = to;
    p.turn = turn_sign(from, to);
    return p;
}

LiftPiece binding(const IPoint& x, const IVec& from) {
    LiftPiece p;
    p.kind = LiftPiece::Kind::Binding;
    p.a = p.b = QPoint(x);
    p.dir = from;
    p.to = -from;
    return p;
}

// Sheets and turns along an open list of points with the given directions.
void append_run(std::vector<LiftPiece>& out, const std::vector<IPoint>& pts, const std::vector<IVec>& dirs) {
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        if (j > 0) out.push_back(turn(pts[j], dirs[j - 1], dirs[j]));
        out.push_back(sheet(pts[j], pts[j + 1], dirs[j]));
    }
}

std::string key(const QPoint& p) { return to_string(p); }
std::string key(const IVec& v) { return to_string(v); }

// Orientation-free description of a piece, so that components can be
// compared as point sets.
std::string piece_key(const LiftPiece& p, bool flip) {
    IVec d = flip ? -p.dir : p.dir;
    IVec e = flip ? -p.to : p.to;
    switch (p.kind) {
    case LiftPiece::Kind::Sheet: {
        std::string a = key(p.a), b = key(p.b);
        if (b < a) std::swap(a, b);
        return "S" + a + b + key(d);
    }
    case LiftPiece::Kind::Turn:
        // The counterclockwise arc, named by its first and last direction.
        return p.turn > 0 ? "T" + key(p.a) + key(d) + key(e) : "T" + key(p.a) + key(e) + key(d);
    case LiftPiece::Kind::Binding: return "B" + key(p.a);
    }
    return "";
}

} // namespace

Lift3D lift(const StrandSet& s) {
    Lift3D l;
    l.source = s;
    for (int k = 0; k < static_cast<int>(s.strands.size()); ++k) {
        const Path p = simplify(s.strands[k]);
        std::vector<IPoint> rev_pts(p.points.rbegin(), p.points.rend());
        std::vector<IVec> rev_dirs;
        for (auto it = p.dirs.rbegin(); it != p.dirs.rend(); ++it) rev_dirs.push_back(-*it);
        if (s.strands[k].kind == StrandKind::Open) {
            LiftComponent c;
            c.strand = k;
            append_run(c.pieces, p.points, p.dirs);
            c.pieces.push_back(binding(p.points.back(), p.dirs.back()));
            append_run(c.pieces, rev_pts, rev_dirs);
            c.pieces.push_back(binding(p.points.front(), -p.dirs.front()));
            l.components.push_back(std::move(c));
            continue;
        }
        for (int sheet_id = 0; sheet_id < 2; ++sheet_id) {
            LiftComponent c;
            c.strand = k;
            c.sheet = sheet_id;
            std::vector<IPoint> pts = sheet_id == 0 ? p.points : rev_pts;
            std::vector<IVec> dirs = sheet_id == 0 ? p.dirs : rev_dirs;
            if (sheet_id == 1) {
                // Start the reversed loop at the same point as the forward one.
                std::rotate(pts.begin(), pts.end() - 1, pts.end());
            }
            pts.push_back(pts.front());
            append_run(c.pieces, pts, dirs);
            c.pieces.push_back(turn(pts.front(), dirs.back(), dirs.front()));
            l.components.push_back(std::move(c));
        }
    }
    return l;
}

Lift3D lift(const DiagonalDivide& d) { return lift(d.strands); }

bool lift_is_invertible(const Lift3D& l) {
    std::map<std::vector<std::string>, int> components;
    std::vector<std::vector<std::string>> images;
    for (const auto& c : l.components) {
        std::vector<std::string> own, image;
        for (const auto& p : c.pieces) {
            own.push_back(piece_key(p, false));
            image.push_back(piece_key(p, true));
        }
        std::sort(own.begin(), own.end());
        std::sort(image.begin(), image.end());
        ++components[own];
        images.push_back(image);
    }
    std::map<std::vector<std::string>, int> mapped;
    for (const auto& im : images) ++mapped[im];
    return mapped == components;
}

} // namespace divlink
