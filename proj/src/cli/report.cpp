#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "divlink/blocks.hpp"
#include "divlink/cli.hpp"
#include "divlink/diagram.hpp"
#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

namespace divlink {
namespace {

using nlohmann::json;

std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

json census_json(const TypeCensus& c) {
    json others = json::object();
    for (const auto& [t, n] : c.others) others[type_name(t)] = n;
    return {{"n1", c.n1}, {"n2", c.n2}, {"n3", c.n3}, {"n4", c.n4}, {"n5", c.n5}, {"others", others}};
}

json coefficients_json(const VolumeCoefficients& v) {
    return {{"tet", v.tet}, {"oct", v.oct}, {"cuboct", v.cuboct}};
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
}

struct Sink {
    json& report;
    void check(const std::string& name, bool ok) { report["checks"][name] = ok; }
    void warn(const std::string& code, const std::string& message) {
        report["warnings"].push_back({{"code", code}, {"message", message}});
    }
    void fail(const std::string& stage, const Error& e) {
        report["errors"].push_back({{"stage", stage}, {"code", e.code()}, {"message", e.what()}});
    }
};

bool chain_length(const std::string& name, int& n) {
    if (name.rfind("chain", 0) != 0 || name.size() <= 5) return false;
    const std::string digits = name.substr(5);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4) return false;
    n = std::stoi(digits);
    return n >= 1;
}

void volume_section(const Divide& d, const TypeCensus& c, Sink& out) {
    json& r = out.report;
    if (c.total() > 0 && c.count(VertexType::T6_3) > 0) {
        try {
            r["hopf"] = hopf_case(c);
        } catch (const Error& e) {
            out.fail("volume", e);
            return;
        }
        r["volume"] = {{"note", "Hopf link"}, {"hyperbolic", false}};
        return;
    }
    r["hopf"] = false;
    if (!d.connected) {
        out.warn("disconnected", "the volume bound needs a connected divide");
        return;
    }
    for (const auto& [t, n] : c.others)
        if (t == VertexType::UNLISTED)
            out.warn("unlisted-type", std::to_string(n) + " double point(s) match none of the local models");
    try {
        const VolumeCoefficients v = volume_coefficients(c);
        const double value = volume_bound(c);
        r["volume"] = {{"coefficients", coefficients_json(v)}, {"value", value}};
        out.check("volume.numeric", std::abs(value - v.value(constants())) < 1e-9);
    } catch (const Error& e) {
        out.warn(e.code(), e.what());
    }
}

void blocks_section(const Divide& d, const std::vector<VertexType>& types, const TypeCensus& c, Sink& out) {
    if (!d.connected || c.total() == 0 || !c.only_block_types()) {
        out.warn("blocks-skipped", "block assembly needs a connected divide whose vertices all have block types");
        return;
    }
    try {
        const PolyhedralComplex x = assemble_complex(d, types);
        const AngleReport a = check_angle_sums(x);
        const TorusReport t = boundary_tori(x);
        const int expected = cusp_count(d);
        json tori = json::array();
        for (const auto& tiling : t.tilings)
            tori.push_back({{"squares", tiling.squares},
                            {"triangles", tiling.triangles},
                            {"euler_characteristic", tiling.euler_characteristic}});
        json violations = json::array();
        for (const auto& v : a.violations)
            violations.push_back({{"edge_class", v.edge_class}, {"angle_units", v.angle_units}, {"detail", v.detail}});
        int cellular = 0;
        for (const auto& ig : x.interfaces) cellular += ig.cellular;
        out.report["blocks"] = {{"block_count", x.blocks.size()},
                                {"polyhedra", x.cells.polys.size()},
                                {"interfaces", x.interfaces.size()},
                                {"cellular_interfaces", cellular},
                                {"inventory", coefficients_json(x.inventory())},
                                {"interior_edge_classes", a.interior_classes},
                                {"interface_edge_classes", a.interface_classes},
                                {"angle_violations", violations},
                                {"tori", tori},
                                {"torus_errors", t.errors},
                                {"expected_tori", expected}};
        out.check("blocks.angle_sums", a.ok());
        out.check("blocks.tori", t.ok());
        out.check("blocks.torus_count", t.count == expected);
        out.check("blocks.inventory", x.inventory() == volume_coefficients(c));
    } catch (const Error& e) {
        out.fail("blocks", e);
    }
}

void diagram_section(const StrandSet& s, const Divide& d, Sink& out) {
    try {
        const Lift3D l = lift(s);
        const PDCode pd = project_pd(l);
        const int expected = d.strands.interval_count + 2 * d.strands.circle_count;
        json section = {{"components", l.components.size()},
                        {"expected_components", expected},
                        {"crossings", pd.crossings.size()},
                        {"finger_moves", pd.finger_count},
                        {"epsilon", pd.epsilon},
                        {"pd", pd_text(pd)},
                        {"gauss", gauss_code_text(pd)},
                        {"invertible", lift_is_invertible(l)}};
        out.check("diagram.component_count", static_cast<int>(l.components.size()) == expected);
        out.check("diagram.invertible", lift_is_invertible(l));
        if (l.components.size() >= 2) {
            const IntMatrix lk = linking_matrix(pd);
            const IntMatrix oracle = gauss_linking_oracle(l);
            section["linking_matrix"] = matrix_json(lk);
            section["oracle_matrix"] = matrix_json(oracle);
            out.check("diagram.linking_oracle", equal_up_to_sign(lk, oracle));
        }
        out.report["diagram"] = section;
    } catch (const Error& e) {
        out.fail("diagram", e);
    }
}

void chain_section(int n, Sink& out) {
    const ChainCuspData cd = chain_cusp_data(n);
    const double bound = n * constants().v_oct;
    json section = {{"n", n}, {"meridian", cd.meridian}, {"slope_length", cd.slope_length}, {"volume_bound", bound}};
    try {
        section["fkp_ratio"] = fkp_ratio(cd.slope_length);
        section["fkp_lower_bound"] = fkp_lower_bound(bound, cd.slope_length);
    } catch (const Error& e) {
        section["fkp_ratio"] = nullptr;
        out.warn(e.code(), e.what());
    }
    out.report["chain"] = section;
}

} // namespace

const char* report_schema_version() { return "divlink-report/1"; }

json run_report(const std::string& source_name, const std::string& text, const ReportOptions& options) {
    const StrandSet s = parse_divide(text);
    json r = {{"schema", report_schema_version()},
              {"source", source_name},
              {"digest", digest(format_divide(s))},
              {"boundary", s.boundary_half_width},
              {"checks", json::object()},
              {"warnings", json::array()},
              {"errors", json::array()}};
    Sink out{r};
    Divide d;
    try {
        d = make_divide(s);
    } catch (const Error& e) {
        out.fail("divide", e);
        return r;
    }
    const PlanarMap& m = d.map;
    r["strands"] = {{"interval", d.strands.interval_count}, {"circle", d.strands.circle_count}};
    r["double_points"] = d.double_point_count();
    r["connected"] = d.connected;
    r["regions"] = {{"total", d.regions.size()},
                    {"internal", d.internal_region_count()},
                    {"external", static_cast<int>(d.regions.size()) - d.internal_region_count()}};
    out.check("map.euler", m.euler_characteristic() == 1 + m.graph_components());

    std::vector<VertexType> types;
    try {
        types = vertex_types(d);
    } catch (const Error& e) {
        out.fail("typing", e);
        return r;
    }
    json vertices = json::array();
    for (std::size_t i = 0; i < types.size(); ++i) {
        const int v = m.crossing_vertex[i];
        const QuadrantProfile p = quadrant_profile(d, v);
        json ext = json::array();
        for (int q = 0; q < 4; ++q)
            if (p.external[q]) ext.push_back(q);
        vertices.push_back({{"index", i},
                            {"position", {m.vertices[v].position.x.get_str(), m.vertices[v].position.y.get_str()}},
                            {"type", type_name(types[i])},
                            {"label", type_label(types[i])},
                            {"external_quadrants", ext},
                            {"endpoint_edges", p.endpoint_edge_count}});
    }
    r["vertices"] = vertices;
    const TypeCensus c = options.hatted ? hatted_census(d) : census_of(types);
    r["hatted"] = options.hatted;
    r["census"] = census_json(c);
    if (d.connected) {
        const PrimeCheck pc = prime_admissible(d);
        r["prime_admissible"] = {{"ok", pc.ok}, {"offending_edges", pc.offending_edges}};
        bool listed = true;
        for (VertexType t : types) listed = listed && prime_type(t);
        out.check("typing.prime_criteria_agree", pc.ok == listed);
        if (!pc.ok) out.warn("not-prime-admissible", "an edge between double points touches no internal region");
    } else {
        r["prime_admissible"] = nullptr;
    }
    try {
        r["link_components"] = link_component_count(d);
        if (d.connected && d.double_point_count() > 0) r["cusps"] = cusp_count(d);
    } catch (const Error& e) {
        out.fail("divide", e);
    }

    volume_section(d, c, out);
    if (options.blocks) {
        if (options.hatted)
            out.warn("blocks-skipped", "blocks are assembled for the divide itself, not its hatted closure");
        else
            blocks_section(d, types, c, out);
    }
    if (options.diagram) diagram_section(s, d, out);
    int n = 0;
    if (chain_length(source_name, n)) chain_section(n, out);
    return r;
}

bool report_ok(const nlohmann::json& report) {
    if (!report.contains("errors") || !report["errors"].empty()) return false;
    for (const auto& [name, ok] : report["checks"].items())
        if (!ok.get<bool>()) return false;
    return true;
}

std::string load_divide_text(const std::string& name_or_path) {
    if (auto e = corpus_entry(name_or_path)) return e->text;
    std::ifstream in(name_or_path);
    if (!in) throw Error("input-not-found", "'" + name_or_path + "' is neither a corpus name nor a readable file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace divlink
