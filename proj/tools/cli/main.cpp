#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "divlink/blocks.hpp"
#include "divlink/cli.hpp"
#include "divlink/diagram.hpp"
#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

using divlink::Error;
using nlohmann::json;

namespace {

struct Common {
    std::string input;
    bool json_out = false;
    bool hatted = false;
};

// Report restricted to the checks a subcommand asks for.
json report_for(const Common& c, bool blocks, bool diagram) {
    divlink::ReportOptions o;
    o.blocks = blocks;
    o.diagram = diagram;
    o.hatted = c.hatted;
    return divlink::run_report(c.input, divlink::load_divide_text(c.input), o);
}

void print_problems(const json& r) {
    for (const auto& w : r["warnings"]) std::cout << "warning [" << w["code"].get<std::string>() << "] " << w["message"].get<std::string>() << "\n";
    for (const auto& e : r["errors"]) std::cout << "error [" << e["code"].get<std::string>() << "] " << e["message"].get<std::string>() << "\n";
    for (const auto& [name, ok] : r["checks"].items())
        if (!ok.get<bool>()) std::cout << "check failed: " << name << "\n";
}

json pick(const json& r, std::initializer_list<const char*> keys) {
    json out = json::object();
    for (const char* k : {"schema", "source", "checks", "warnings", "errors"}) out[k] = r[k];
    for (const char* k : keys)
        if (r.contains(k)) out[k] = r[k];
    return out;
}

std::string census_line(const json& c) {
    std::string s = "(" + std::to_string(c["n1"].get<int>()) + "," + std::to_string(c["n2"].get<int>()) + "," +
                    std::to_string(c["n3"].get<int>()) + "," + std::to_string(c["n4"].get<int>()) + "," +
                    std::to_string(c["n5"].get<int>()) + ")";
    for (const auto& [t, n] : c["others"].items()) s += " " + t + "x" + std::to_string(n.get<int>());
    return s;
}

int finish(const json& shown, const json& full, bool as_json) {
    if (as_json) std::cout << shown.dump(2) << "\n";
    else print_problems(full);
    return divlink::report_ok(full) ? 0 : 1;
}

int cmd_validate(const Common& c) {
    const json r = report_for(c, false, false);
    if (!c.json_out && r.contains("regions")) {
        std::cout << "strands: " << r["strands"]["interval"] << " interval, " << r["strands"]["circle"] << " circle\n"
                  << "double points: " << r["double_points"] << "\n"
                  << "regions: " << r["regions"]["total"] << " (" << r["regions"]["internal"] << " internal)\n"
                  << "connected: " << (r["connected"].get<bool>() ? "yes" : "no") << "\n";
    }
    return finish(pick(r, {"digest", "boundary", "strands", "double_points", "connected", "regions"}), r, c.json_out);
}

int cmd_classify(const Common& c) {
    const json r = report_for(c, false, false);
    if (!c.json_out && r.contains("vertices")) {
        for (const auto& v : r["vertices"])
            std::cout << "vertex " << v["index"] << " at (" << v["position"][0].get<std::string>() << ","
                      << v["position"][1].get<std::string>() << "): " << v["label"].get<std::string>() << "\n";
        std::cout << "census (n1..n5): " << census_line(r["census"]) << "\n";
        if (r["prime_admissible"].is_object())
            std::cout << "prime admissible: " << (r["prime_admissible"]["ok"].get<bool>() ? "yes" : "no") << "\n";
    }
    return finish(pick(r, {"vertices", "census", "hatted", "prime_admissible"}), r, c.json_out);
}

int cmd_volume(const Common& c) {
    const json r = report_for(c, false, false);
    if (!c.json_out && r.contains("census")) {
        std::cout << "census (n1..n5): " << census_line(r["census"]) << "\n";
        if (r.contains("volume") && r["volume"].contains("note")) {
            std::cout << r["volume"]["note"].get<std::string>() << ", no volume bound\n";
        } else if (r.contains("volume")) {
            const auto& k = r["volume"]["coefficients"];
            std::cout << "volume bound: " << k["tet"] << " v_tet + " << k["oct"] << " v_oct + " << k["cuboct"]
                      << " v_cuboct = " << std::setprecision(10) << r["volume"]["value"].get<double>() << "\n";
        }
    }
    return finish(pick(r, {"census", "hatted", "hopf", "volume"}), r, c.json_out);
}

int cmd_blocks(const Common& c, const std::string& export_path) {
    const json r = report_for(c, true, false);
    if (!export_path.empty()) {
        const auto s = divlink::parse_divide(divlink::load_divide_text(c.input));
        const auto d = divlink::make_divide(s);
        const auto x = divlink::assemble_complex(d, divlink::vertex_types(d));
        std::ofstream out(export_path);
        out << divlink::export_triangulation(x);
    }
    if (!c.json_out && r.contains("blocks")) {
        const auto& b = r["blocks"];
        std::cout << "blocks: " << b["block_count"] << ", polyhedra: " << b["polyhedra"] << " (" << b["inventory"]["tet"]
                  << " tet, " << b["inventory"]["oct"] << " oct, " << b["inventory"]["cuboct"] << " cuboct)\n"
                  << "interfaces: " << b["interfaces"] << " (" << b["cellular_interfaces"] << " cellular)\n"
                  << "edge classes: " << b["interior_edge_classes"] << " interior, " << b["interface_edge_classes"]
                  << " on interfaces\n"
                  << "boundary tori: " << b["tori"].size() << " (expected " << b["expected_tori"] << ")\n";
    }
    return finish(pick(r, {"census", "blocks"}), r, c.json_out);
}

int cmd_diagram(const Common& c, bool diagonal) {
    if (diagonal) {
        const auto s = divlink::parse_divide(divlink::load_divide_text(c.input));
        const auto d = divlink::diagonalize(s);
        const std::string text = divlink::format_divide(d.strands);
        const json r = divlink::run_report(c.input + " (diagonal)", text, {true, false, false});
        if (!c.json_out) {
            std::cout << "scale: " << d.scale << "\n" << text;
            if (r.contains("diagram")) std::cout << r["diagram"]["pd"].get<std::string>() << "\n";
        }
        json shown = pick(r, {"diagram"});
        shown["diagonal"] = {{"scale", d.scale}, {"divide", text}};
        return finish(shown, r, c.json_out);
    }
    const json r = report_for(c, false, true);
    if (!c.json_out && r.contains("diagram")) {
        const auto& g = r["diagram"];
        std::cout << "components: " << g["components"] << "\ncrossings: " << g["crossings"] << "\n"
                  << g["pd"].get<std::string>() << "\n"
                  << g["gauss"].get<std::string>() << "\n";
        if (g.contains("linking_matrix")) {
            std::cout << "linking matrix:\n";
            for (const auto& row : g["linking_matrix"]) std::cout << "  " << row.dump() << "\n";
        }
    }
    return finish(pick(r, {"diagram"}), r, c.json_out);
}

int cmd_render(const Common& c, const std::string& out_path) {
    const auto s = divlink::parse_divide(divlink::load_divide_text(c.input));
    const auto d = divlink::make_divide(s);
    const std::string svg = divlink::render_svg(d);
    if (out_path.empty() || out_path == "-") {
        std::cout << svg;
    } else {
        std::ofstream out(out_path);
        out << svg;
    }
    return 0;
}

int cmd_chain(int n, bool as_json) {
    const std::string name = "chain" + std::to_string(n);
    const json r = divlink::run_report(name, divlink::format_divide(divlink::chain_divide(n)), {false, false, false});
    if (!as_json) {
        const auto& ch = r["chain"];
        std::cout << "census (n1..n5): " << census_line(r["census"]) << "\n"
                  << "volume bound: " << n << " v_oct = " << std::setprecision(10) << ch["volume_bound"].get<double>() << "\n"
                  << "meridian: (" << ch["meridian"][0] << "," << ch["meridian"][1] << ")\n"
                  << "slope length: " << ch["slope_length"].get<double>() << "\n";
        if (ch["fkp_ratio"].is_null()) std::cout << "FKP bound: not applicable (slope length <= 2 pi)\n";
        else std::cout << "FKP ratio: " << ch["fkp_ratio"].get<double>() << ", lower bound " << ch["fkp_lower_bound"].get<double>() << "\n";
    }
    return finish(pick(r, {"census", "volume", "chain"}), r, as_json);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divide link toolkit: vertex types, volume bounds, block complexes and link diagrams"};
    app.require_subcommand(1);
    Common common;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", common.input, "divide file or corpus name (xshape, p0, p1, p2, p3, nonprime_sum, chain<n>)")
            ->required();
        sub->add_flag("--json", common.json_out, "machine-readable output");
    };

    auto* validate = app.add_subcommand("validate", "parse a divide and check the planar map");
    add_input(validate);
    auto* classify = app.add_subcommand("classify", "vertex types, census and prime admissibility");
    add_input(classify);
    classify->add_flag("--hatted", common.hatted, "use the closure in which every region is kept");
    auto* volume = app.add_subcommand("volume", "volume bound from the type census");
    add_input(volume);
    volume->add_flag("--hatted", common.hatted, "use the closure in which every region is kept");
    std::string export_path;
    auto* blocks = app.add_subcommand("blocks", "assemble the polyhedral complex and run its checks");
    add_input(blocks);
    blocks->add_option("--export", export_path, "write the triangulation dump to this file");
    bool diagonal = false;
    auto* diagram = app.add_subcommand("diagram", "PD code and linking numbers of the link of the divide");
    add_input(diagram);
    diagram->add_flag("--diagonalize", diagonal, "redraw with slope +-1 segments first");
    std::string svg_path;
    auto* render = app.add_subcommand("render", "SVG picture with region shading and vertex types");
    add_input(render);
    render->add_option("-o,--output", svg_path, "output file (default: standard output)");
    int chain_n = 0;
    bool chain_json = false;
    auto* chain = app.add_subcommand("chain", "chain family: census, volume and slope length");
    chain->add_option("n", chain_n, "number of strands")->required()->check(CLI::Range(1, 2000));
    chain->add_flag("--json", chain_json, "machine-readable output");
    std::vector<std::string> report_inputs;
    bool no_diagram = false, no_blocks = false;
    auto* report = app.add_subcommand("report", "full JSON report");
    report->add_option("inputs", report_inputs, "divide files or corpus names")->required();
    report->add_flag("--hatted", common.hatted, "use the closure in which every region is kept");
    report->add_flag("--no-diagram", no_diagram, "skip the link diagram");
    report->add_flag("--no-blocks", no_blocks, "skip the block complex");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*validate) return cmd_validate(common);
        if (*classify) return cmd_classify(common);
        if (*volume) return cmd_volume(common);
        if (*blocks) return cmd_blocks(common, export_path);
        if (*diagram) return cmd_diagram(common, diagonal);
        if (*render) return cmd_render(common, svg_path);
        if (*chain) return cmd_chain(chain_n, chain_json);
        if (*report) {
            json all = json::array();
            bool ok = true;
            for (const auto& in : report_inputs) {
                divlink::ReportOptions o;
                o.hatted = common.hatted;
                o.diagram = !no_diagram;
                o.blocks = !no_blocks;
                json r = divlink::run_report(in, divlink::load_divide_text(in), o);
                ok = ok && divlink::report_ok(r);
                all.push_back(std::move(r));
            }
            std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "] " << e.what() << "\n";
        return 2;
    }
    return 1;
}
