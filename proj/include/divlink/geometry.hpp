#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace divlink {

using Q = mpq_class;

struct IVec {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const IVec&, const IVec&) = default;
    IVec operator-() const { return {-x, -y}; }
};

using IPoint = IVec;

inline IVec operator-(const IPoint& a, const IPoint& b) { return {a.x - b.x, a.y - b.y}; }

inline __int128 cross(const IVec& a, const IVec& b) {
    return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}

inline __int128 dot(const IVec& a, const IVec& b) {
    return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}

inline IVec primitive(const IVec& v) {
    std::int64_t g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

struct QPoint {
    Q x;
    Q y;

    QPoint() = default;
    QPoint(Q xx, Q yy) : x(std::move(xx)), y(std::move(yy)) {}
    explicit QPoint(const IPoint& p) : x(static_cast<long>(p.x)), y(static_cast<long>(p.y)) {}

    friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const QPoint& a, const QPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline QPoint operator+(const QPoint& a, const QPoint& b) { return {a.x + b.x, a.y + b.y}; }
inline QPoint operator-(const QPoint& a, const QPoint& b) { return {a.x - b.x, a.y - b.y}; }
inline QPoint operator*(const Q& s, const QPoint& a) { return {s * a.x, s * a.y}; }
inline QPoint to_q(const IVec& v) { return QPoint(v); }
inline Q qcross(const QPoint& a, const QPoint& b) { return a.x * b.y - a.y * b.x; }

inline std::string to_string(const Q& q) { return q.get_str(); }
inline std::string to_string(const QPoint& p) { return "(" + p.x.get_str() + "," + p.y.get_str() + ")"; }
inline std::string to_string(const IPoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Position of a nonzero vector in the counterclockwise order that starts at
// the positive x axis; used to sort half-edges around a vertex.
inline int ccw_class(const IVec& v) {
    if (v.y == 0 && v.x > 0) return 0;
    if (v.y > 0) return 1;
    if (v.y == 0 && v.x < 0) return 2;
    return 3;
}

inline bool ccw_less(const IVec& a, const IVec& b) {
    int ca = ccw_class(a), cb = ccw_class(b);
    if (ca != cb) return ca < cb;
    return cross(a, b) > 0;
}

// Order of direction angles taken in (-pi, pi]. Direction vectors stand for
// the tangent angle theta of a lifted sheet.
inline int theta_class(const IVec& v) {
    if (v.y < 0) return 0;
    if (v.y == 0 && v.x > 0) return 1;
    if (v.y > 0) return 2;
    return 3;
}

inline int theta_compare(const IVec& a, const IVec& b) {
    int ca = theta_class(a), cb = theta_class(b);
    if (ca != cb) return ca < cb ? -1 : 1;
    __int128 c = cross(a, b);
    if (c > 0) return -1;
    if (c < 0) return 1;
    return 0;
}

} // namespace divlink
