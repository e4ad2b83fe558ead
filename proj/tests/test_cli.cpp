#include <regex>

#include "doctest.h"
#include "divlink/cli.hpp"
#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

using namespace divlink;

namespace {

int count_of(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + needle.size())) ++n;
    return n;
}

} // namespace

TEST_SUITE("cli") {
    TEST_CASE("corpus entries parse and have goldens") {
        for (const auto& e : corpus()) {
            CHECK_NOTHROW(parse_divide(e.text));
            CHECK(corpus_golden(e.name).has_value());
        }
        CHECK_FALSE(corpus_entry("no-such-divide").has_value());
        CHECK(corpus_entry("chain12").has_value());
    }

    TEST_CASE("chain census for n = 1..50") {
        for (int n = 1; n <= 50; ++n) {
            const Divide d = make_divide(chain_divide(n));
            const TypeCensus c = census(d);
            CHECK_MESSAGE(c == corpus_golden("chain" + std::to_string(n))->census, n);
            CHECK(static_cast<int>(d.regions.size()) == 2 * n + 1);
            CHECK(volume_bound(c) == doctest::Approx(n * constants().v_oct));
        }
        CHECK_THROWS_AS(chain_divide(0), Error);
    }

    TEST_CASE("random divides are deterministic and valid") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const StrandSet a = random_divide(seed, 3);
            CHECK(format_divide(a) == format_divide(random_divide(seed, 3)));
            const Divide d = make_divide(a);
            CHECK(d.connected);
            CHECK(d.double_point_count() > 0);
        }
        CHECK(format_divide(random_divide(1, 3)) != format_divide(random_divide(2, 3)));
        CHECK_THROWS_AS(random_divide(1, 0), Error);
        RandomOptions o;
        o.prime_blocks_only = true;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Divide d = make_divide(random_divide(seed, o));
            CHECK(census(d).only_block_types());
            CHECK(prime_admissible(d).ok);
        }
    }

    TEST_CASE("SVG labels") {
        auto svg = [](const std::string& name) {
            return render_svg(make_divide(parse_divide(corpus_entry(name)->text)));
        };
        const std::string p1 = svg("p1");
        CHECK(p1.rfind("<svg", 0) == 0);
        CHECK(count_of(p1, "class=\"vertex-type\"") == 1);
        CHECK(count_of(p1, ">5-3</text>") == 1);
        CHECK(count_of(p1, "class=\"region internal\"") == 1);
        CHECK(count_of(svg("xshape"), ">6-3</text>") == 1);
        const std::string p3 = svg("p3");
        CHECK(count_of(p3, "class=\"vertex-type\"") == 10);
        CHECK(count_of(p3, "class=\"region internal\"") == 6);
        CHECK(count_of(p3, "<polyline") == 5);
        SvgOptions plain;
        plain.labels = false;
        plain.shade_regions = false;
        const std::string bare = render_svg(make_divide(parse_divide(corpus_entry("p3")->text)), plain);
        CHECK(count_of(bare, "vertex-type") == 0);
        CHECK(count_of(bare, "region internal") == 0);
    }

    TEST_CASE("report fields") {
        const auto r = run_report("p3", corpus_entry("p3")->text);
        CHECK(r["schema"] == report_schema_version());
        CHECK(std::regex_match(r["digest"].get<std::string>(), std::regex("fnv1a64:[0-9a-f]{16}")));
        CHECK(r["census"]["n4"] == 4);
        CHECK(r["volume"]["value"].get<double>() == doctest::Approx(77.1534).epsilon(1e-5));
        CHECK(r["blocks"]["tori"].size() == 11);
        CHECK(r["diagram"]["components"] == 5);
        CHECK(report_ok(r));

        const auto hopf = run_report("xshape", corpus_entry("xshape")->text);
        CHECK(hopf["volume"]["note"] == "Hopf link");
        CHECK(hopf["hopf"] == true);
        CHECK(report_ok(hopf));

        const auto chain = run_report("chain7", corpus_entry("chain7")->text);
        CHECK(chain["chain"]["slope_length"].get<double>() == doctest::Approx(std::sqrt(58.0)));
        CHECK_FALSE(chain["chain"]["fkp_ratio"].is_null());

        ReportOptions hatted;
        hatted.hatted = true;
        const auto h = run_report("p1", corpus_entry("p1")->text, hatted);
        CHECK(h["volume"]["value"].get<double>() == doctest::Approx(4 * constants().v_oct));

        const auto bad = run_report("apart", "boundary 4\nopen (-4,-1) (4,-1)\nopen (-4,1) (4,1)\n");
        CHECK(bad["connected"] == false);
        CHECK_FALSE(bad["warnings"].empty());
    }

    TEST_CASE("unknown inputs") {
        CHECK_THROWS_AS(load_divide_text("/nonexistent/file.divide"), Error);
        CHECK(load_divide_text("p1") == corpus_entry("p1")->text);
    }
}
