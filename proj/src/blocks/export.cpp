#include <sstream>

#include "divlink/blocks.hpp"

namespace divlink {

std::string export_triangulation(const PolyhedralComplex& x) {
    std::ostringstream out;
    out << "% divlink polyhedral complex\n";
    out << "polyhedra " << x.cells.polys.size() << "\n";
    for (int p = 0; p < static_cast<int>(x.cells.polys.size()); ++p) {
        const ShapeData& sd = shape_data(x.cells.polys[p]);
        const PlacedBlock& pb = x.blocks[x.block_of_poly(p)];
        out << "\npolyhedron " << p << " " << sd.name << " block " << x.block_of_poly(p) << " "
            << type_name(pb.type) << "\n";
        for (int f = 0; f < static_cast<int>(sd.faces.size()); ++f) {
            out << "  face " << f << " (";
            for (std::size_t k = 0; k < sd.faces[f].size(); ++k) out << (k ? " " : "") << sd.faces[f][k];
            out << ")";
            auto it = x.cells.glue.find({p, f});
            if (it == x.cells.glue.end()) {
                out << " boundary\n";
                continue;
            }
            out << " -> " << it->second.to.poly << " " << it->second.to.face << " (";
            for (std::size_t k = 0; k < it->second.vertex_map.size(); ++k)
                out << (k ? " " : "") << it->second.vertex_map[k];
            out << ")\n";
        }
    }
    for (const auto& ig : x.interfaces) {
        if (ig.cellular) continue;
        out << "\ninterface edge " << ig.edge << " block " << ig.a.block << " slot " << ig.a.slot << " block "
            << ig.b.block << " slot " << ig.b.slot << " holes " << ig.holes << "\n";
        for (const auto& [pa, pb] : ig.punctures) out << "  puncture " << prong_name(pa) << " -> " << prong_name(pb) << "\n";
    }
    return out.str();
}

} // namespace divlink
