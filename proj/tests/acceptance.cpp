// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "divlink/blocks.hpp"
#include "divlink/cli.hpp"
#include "divlink/diagram.hpp"
#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

using namespace divlink;
using std::numbers::pi;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) detail << what;
            ok = false;
        }
    }
};

Divide corpus_divide(const std::string& name) { return make_divide(parse_divide(corpus_entry(name)->text)); }

void constants_criterion(Outcome& o) {
    const auto& k = constants();
    o.require(std::abs(k.v_tet - 1.0149416) < 5e-4, "v_tet");
    o.require(std::abs(k.v_oct - 3.6638623) < 5e-4, "v_oct");
    o.require(std::abs(cuboct_volume_oracle() - 12.046) < 1e-3, "cuboctahedron oracle");
    o.require(std::abs(ideal_polyhedron_volume(oct_vertices()) - k.v_oct) < 1e-6, "octahedron self-test");
    o.require(std::abs(ideal_polyhedron_volume(tet_vertices()) - k.v_tet) < 1e-6, "tetrahedron self-test");
    o.detail << "v_tet=" << k.v_tet << " v_oct=" << k.v_oct << " v_cuboct=" << k.v_cuboct;
}

void p3_criterion(Outcome& o) {
    const auto r = run_report("p3", corpus_entry("p3")->text);
    const auto& c = r["census"];
    o.require(c["n1"] == 1 && c["n2"] == 1 && c["n3"] == 1 && c["n4"] == 4 && c["n5"] == 3 && c["others"].empty(),
              "census");
    const double v = r["volume"]["value"].get<double>();
    o.require(std::abs(v - 77.1534) < 1e-3, "volume");
    o.detail << "census (1,1,1,4,3), volume " << v;
}

void small_examples_criterion(Outcome& o) {
    const auto& k = constants();
    const double p1 = volume_bound(census(corpus_divide("p1")));
    const double p2 = volume_bound(census(corpus_divide("p2")));
    const TypeCensus hat = hatted_census(corpus_divide("p1"));
    const double hp1 = volume_bound(hat);
    o.require(std::abs(p1 - k.v_oct) < 1e-9, "p1");
    o.require(std::abs(p2 - 2 * k.v_cuboct) < 1e-9, "p2");
    o.require(hat.n1 == 1 && hat.total() == 1, "hatted census");
    o.require(std::abs(hp1 - 4 * k.v_oct) < 1e-9, "hatted p1");
    o.detail << "p1=" << p1 << " p2=" << p2 << " hatted p1=" << hp1;
}

void hopf_criterion(Outcome& o) {
    const auto r = run_report("xshape", corpus_entry("xshape")->text);
    o.require(r["hopf"] == true, "hopf flag");
    o.require(r["volume"].value("note", "") == "Hopf link", "note");
    o.require(!r["volume"].contains("value"), "no volume bound");
    o.detail << "xshape: Hopf link";
}

void chain_criterion(Outcome& o) {
    for (int n = 1; n <= 50; ++n) {
        const TypeCensus c = census(make_divide(chain_divide(n)));
        TypeCensus want;
        want.n5 = n;
        o.require(c == want, "census n=" + std::to_string(n));
        o.require(std::abs(volume_bound(c) - n * constants().v_oct) < 1e-9, "bound n=" + std::to_string(n));
        const double len = chain_cusp_data(n).slope_length;
        o.require(std::abs(len - std::hypot(n - 4.0, n)) < 1e-12, "slope n=" + std::to_string(n));
    }
    const double l5 = chain_cusp_data(5).slope_length, l6 = chain_cusp_data(6).slope_length,
                 l7 = chain_cusp_data(7).slope_length;
    o.require(l5 < 2 * pi && 2 * pi < l6 && l6 < l7 && std::abs(l7 - std::sqrt(58.0)) < 1e-12, "2 pi threshold");
    bool inapplicable = false;
    try {
        fkp_ratio(l5);
    } catch (const Error&) {
        inapplicable = true;
    }
    o.require(inapplicable, "bound at n=5");
    const double r200 = fkp_ratio(chain_cusp_data(200).slope_length);
    o.require(r200 > 0.999, "ratio n=200");
    o.detail << "n=1..50, l(6)=" << l6 << " l(7)=" << l7 << " ratio(200)=" << r200;
}

void blocks_criterion(Outcome& o) {
    std::vector<std::pair<std::string, StrandSet>> inputs;
    for (const auto& e : corpus()) {
        const Divide d = corpus_divide(e.name);
        if (census(d).count(VertexType::T6_3) == 0 && census(d).only_block_types()) inputs.push_back({e.name, parse_divide(e.text)});
    }
    RandomOptions opt;
    opt.prime_blocks_only = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        opt.size = 2 + static_cast<int>(seed % 3);
        inputs.push_back({"random" + std::to_string(seed), random_divide(seed, opt)});
    }
    for (const auto& [name, s] : inputs) {
        const Divide d = make_divide(s);
        const PolyhedralComplex x = assemble_complex(d, vertex_types(d));
        const TorusReport t = boundary_tori(x);
        o.require(check_angle_sums(x).ok(), name + " angle sums");
        o.require(t.ok(), name + " tori");
        o.require(t.count == cusp_count(d), name + " torus count");
        o.require(x.inventory() == volume_coefficients(census(d)), name + " inventory");
    }
    o.detail << inputs.size() << " complexes";
}

void diagram_criterion(Outcome& o) {
    std::vector<std::pair<std::string, StrandSet>> inputs;
    for (const auto& e : corpus()) inputs.push_back({e.name, parse_divide(e.text)});
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        inputs.push_back({"random" + std::to_string(seed), random_divide(seed, 2 + static_cast<int>(seed % 3))});
    for (const auto& [name, s] : inputs) {
        int expected = 0;
        for (const Strand& st : s.strands) expected += st.kind == StrandKind::Open ? 1 : 2;
        const Lift3D l = lift(s);
        o.require(static_cast<int>(l.components.size()) == expected, name + " components");
        if (l.components.size() >= 2)
            o.require(equal_up_to_sign(linking_matrix(project_pd(l)), gauss_linking_oracle(l)), name + " oracle");
    }
    for (int n = 3; n <= 8; ++n) {
        const Lift3D l = lift(chain_divide(n));
        o.require(static_cast<int>(l.components.size()) == n, "chain components");
        const IntMatrix lk = linking_matrix(project_pd(l));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int gap = std::abs(l.components[i].strand - l.components[j].strand);
                o.require(std::abs(lk[i][j]) == ((gap == 1 || gap == n - 1) ? 1 : 0), "chain" + std::to_string(n) + " linking");
            }
    }
    o.detail << inputs.size() << " divides, chains 3..8";
}

void primality_criterion(Outcome& o) {
    std::vector<Divide> inputs;
    for (const auto& name : corpus_names()) inputs.push_back(corpus_divide(name));
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        inputs.push_back(make_divide(random_divide(seed, 1 + static_cast<int>(seed % 6))));
    int nonprime = 0;
    for (const Divide& d : inputs) {
        bool listed = true;
        for (VertexType t : vertex_types(d)) listed = listed && prime_type(t);
        const bool ok = prime_admissible(d).ok;
        nonprime += !ok;
        o.require(ok == listed, "disagreement");
    }
    o.detail << inputs.size() << " divides, " << nonprime << " not prime-admissible";
}

} // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"volume constants", constants_criterion},
        {"five-interval example", p3_criterion},
        {"alpha-divide and two circles", small_examples_criterion},
        {"Hopf detection", hopf_criterion},
        {"chain family", chain_criterion},
        {"block invariants", blocks_criterion},
        {"diagram invariants", diagram_criterion},
        {"primality criteria", primality_criterion},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.ok;
        std::cout << "criterion " << ++index << " " << (o.ok ? "PASS" : "FAIL") << "  " << name << ": " << o.detail.str()
                  << "\n";
    }
    return failures == 0 ? 0 : 1;
}
