#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <set>

#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

namespace divlink {
namespace {

using Vec = SpherePoint;

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Vec scale(const Vec& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
Vec normalized(const Vec& a) { return scale(a, 1 / std::sqrt(dot(a, a))); }

constexpr double kEps = 1e-9;

// Faces of the convex hull of points in convex position, each listed in
// cyclic order.
std::vector<std::vector<int>> hull_faces(const std::vector<Vec>& p) {
    const int n = static_cast<int>(p.size());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec normal = cross(sub(p[j], p[i]), sub(p[k], p[i]));
                if (dot(normal, normal) < kEps) continue;
                int above = 0, below = 0;
                std::vector<int> on;
                for (int m = 0; m < n; ++m) {
                    double s = dot(normal, sub(p[m], p[i]));
                    if (s > kEps) ++above;
                    else if (s < -kEps) ++below;
                    else on.push_back(m);
                }
                if (above && below) continue;
                if (!seen.insert(on).second) continue;
                Vec centre{0, 0, 0};
                for (int m : on) centre = sub(centre, scale(p[m], -1.0 / on.size()));
                Vec u = normalized(sub(p[on[0]], centre));
                Vec v = normalized(cross(normal, u));
                std::sort(on.begin(), on.end(), [&](int a, int b) {
                    Vec da = sub(p[a], centre), db = sub(p[b], centre);
                    return std::atan2(dot(da, v), dot(da, u)) < std::atan2(dot(db, v), dot(db, u));
                });
                faces.push_back(on);
            }
    return faces;
}

double triangle_angle(std::complex<double> at, std::complex<double> b, std::complex<double> c) {
    return std::abs(std::arg((c - at) / (b - at)));
}

} // namespace

double VolumeCoefficients::value(const VolumeConstants& k) const {
    return static_cast<double>(tet) * k.v_tet + static_cast<double>(oct) * k.v_oct +
           static_cast<double>(cuboct) * k.v_cuboct;
}

VolumeCoefficients& VolumeCoefficients::operator+=(const VolumeCoefficients& o) {
    tet += o.tet;
    oct += o.oct;
    cuboct += o.cuboct;
    return *this;
}

double ideal_tetra_volume(double alpha, double beta, double gamma) {
    const double pi = std::numbers::pi;
    if (std::abs(alpha + beta + gamma - pi) > 1e-9)
        throw Error("angle-sum", "dihedral angles of an ideal tetrahedron must sum to pi");
    for (double a : {alpha, beta, gamma})
        if (!(a > 0 && a < pi)) throw Error("angle-sum", "dihedral angles must lie in (0, pi)");
    return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

double ideal_polyhedron_volume(const std::vector<SpherePoint>& vertices, int cone_vertex) {
    std::vector<Vec> p;
    for (const auto& v : vertices) p.push_back(normalized(v));
    if (cone_vertex < 0)
        cone_vertex = static_cast<int>(std::min_element(p.begin(), p.end()) - p.begin());
    const Vec& c = p[cone_vertex];
    // Stereographic projection from c onto the plane orthogonal to c.
    Vec e1 = std::abs(c[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
    e1 = normalized(sub(e1, scale(c, dot(e1, c))));
    Vec e2 = cross(c, e1);
    auto project = [&](int i) {
        double d = 1 - dot(p[i], c);
        return std::complex<double>(dot(p[i], e1) / d, dot(p[i], e2) / d);
    };
    double volume = 0;
    for (const auto& face : hull_faces(p)) {
        if (std::find(face.begin(), face.end(), cone_vertex) != face.end()) continue;
        for (std::size_t k = 1; k + 1 < face.size(); ++k) {
            auto a = project(face[0]), b = project(face[k]), d = project(face[k + 1]);
            double alpha = triangle_angle(a, b, d);
            double beta = triangle_angle(b, d, a);
            double gamma = std::numbers::pi - alpha - beta;
            volume += ideal_tetra_volume(alpha, beta, gamma);
        }
    }
    return volume;
}

std::vector<SpherePoint> cuboct_vertices() {
    std::vector<SpherePoint> v;
    const double s = 1 / std::numbers::sqrt2;
    for (int a : {1, -1})
        for (int b : {1, -1}) {
            v.push_back({a * s, b * s, 0});
            v.push_back({a * s, 0, b * s});
            v.push_back({0, a * s, b * s});
        }
    return v;
}

std::vector<SpherePoint> oct_vertices() {
    return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

std::vector<SpherePoint> tet_vertices() {
    const double s = 1 / std::sqrt(3.0);
    return {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
}

double cuboct_volume_oracle() { return ideal_polyhedron_volume(cuboct_vertices()); }

const VolumeConstants& constants() {
    static std::once_flag once;
    static VolumeConstants k;
    std::call_once(once, [] {
        k.v_tet = 3 * lobachevsky(std::numbers::pi / 3);
        k.v_oct = 8 * lobachevsky(std::numbers::pi / 4);
        k.v_cuboct = cuboct_volume_oracle();
    });
    return k;
}

} // namespace divlink
