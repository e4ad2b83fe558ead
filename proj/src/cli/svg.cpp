#include <iomanip>
#include <sstream>

#include "divlink/cli.hpp"

namespace divlink {
namespace {

struct Frame {
    double n;
    double pixels;
    double margin = 16;

    double x(const Q& v) const { return margin + (v.get_d() + n) / (2 * n) * pixels; }
    double y(const Q& v) const { return margin + (n - v.get_d()) / (2 * n) * pixels; }
    double x(std::int64_t v) const { return margin + (static_cast<double>(v) + n) / (2 * n) * pixels; }
    double y(std::int64_t v) const { return margin + (n - static_cast<double>(v)) / (2 * n) * pixels; }
};

// One closed subpath per boundary cycle of the face.
std::string face_path(const PlanarMap& m, int face, const Frame& f) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    for (int start : m.faces[face].cycles) {
        bool first = true;
        int h = start;
        do {
            const auto pts = m.path(h);
            for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
                out << (first ? "M" : "L") << f.x(pts[k].x) << "," << f.y(pts[k].y) << " ";
                first = false;
            }
            h = m.halfedges[h].next;
        } while (h != start);
        out << "Z ";
    }
    return out.str();
}

} // namespace

std::string render_svg(const Divide& d, const SvgOptions& options) {
    const PlanarMap& m = d.map;
    const Frame f{static_cast<double>(m.strands.boundary_half_width), options.pixels};
    const double size = options.pixels + 2 * f.margin;
    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
        << size << " " << size << "\">\n";
    out << "  <rect class=\"disk\" x=\"" << f.margin << "\" y=\"" << f.margin << "\" width=\"" << options.pixels
        << "\" height=\"" << options.pixels << "\" fill=\"#ffffff\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    if (options.shade_regions) {
        for (const Region& r : d.regions) {
            if (!r.internal) continue;
            out << "  <path class=\"region internal\" fill=\"#c9def2\" fill-rule=\"evenodd\" stroke=\"none\" d=\""
                << face_path(m, r.face, f) << "\"/>\n";
        }
    }
    for (const Strand& st : m.strands.strands) {
        out << "  <" << (st.kind == StrandKind::Closed ? "polygon" : "polyline")
            << " class=\"strand\" fill=\"none\" stroke=\"#1b1b1b\" stroke-width=\"2\" points=\"";
        for (std::size_t k = 0; k < st.points.size(); ++k)
            out << (k ? " " : "") << f.x(st.points[k].x) << "," << f.y(st.points[k].y);
        out << "\"/>\n";
    }
    if (options.labels) {
        const auto types = vertex_types(d);
        for (std::size_t i = 0; i < m.crossing_vertex.size(); ++i) {
            const QPoint& p = m.vertices[m.crossing_vertex[i]].position;
            const bool listed = types[i] != VertexType::UNLISTED;
            out << "  <circle class=\"vertex\" cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y)
                << "\" r=\"3.5\" fill=\"" << (listed ? "#c0392b" : "#7f7f7f") << "\"/>\n";
            out << "  <text class=\"vertex-type\" x=\"" << f.x(p.x) + 5 << "\" y=\"" << f.y(p.y) - 5
                << "\" font-family=\"sans-serif\" font-size=\"12\">" << type_label(types[i]) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace divlink
