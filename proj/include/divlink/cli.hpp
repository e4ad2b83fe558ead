#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "divlink/arrangement.hpp"
#include "divlink/divide_map.hpp"
#include "divlink/typing.hpp"

namespace divlink {

// ---------------------------------------------------------------- corpus

struct CorpusEntry {
    std::string name;
    std::string text; // divide file contents
};

// Built-in divides: xshape, p0, p1, p2, p3, nonprime_sum and the chain
// family as "chain<n>" (for example "chain7").
std::vector<CorpusEntry> corpus();
std::vector<std::string> corpus_names();
std::optional<CorpusEntry> corpus_entry(const std::string& name);

// n strands around a central n-gon, each crossing its two neighbours once.
StrandSet chain_divide(int n);

// Values the named corpus divide must reproduce.
struct CorpusGolden {
    TypeCensus census;
    int regions = 0;
    int internal_regions = 0;
};
std::optional<CorpusGolden> corpus_golden(const std::string& name);

// ---------------------------------------------------------------- random

struct RandomOptions {
    int size = 3;                 // number of strands
    bool prime_blocks_only = false; // require every vertex to have a block type
    int max_attempts = 20000;
};

// Deterministic for a given seed and options. Throws Error("generation-timeout").
StrandSet random_divide(std::uint64_t seed, const RandomOptions& options = {});
StrandSet random_divide(std::uint64_t seed, int size);

// ---------------------------------------------------------------- output

struct SvgOptions {
    double pixels = 480;
    bool labels = true;
    bool shade_regions = true;
};

std::string render_svg(const Divide& d, const SvgOptions& options = {});

struct ReportOptions {
    bool diagram = true;     // include the PD code summary and linking checks
    bool blocks = true;      // assemble and check the polyhedral complex
    bool hatted = false;     // treat every region as internal
};

// Runs the whole pipeline on divide text. Errors are reported inside the JSON
// document under "errors" with their codes; the function only throws when
// the input does not parse.
nlohmann::json run_report(const std::string& source_name, const std::string& text, const ReportOptions& options = {});

// Resolves a corpus name or a file path to divide text.
std::string load_divide_text(const std::string& name_or_path);

// True when every check recorded in a report passed.
bool report_ok(const nlohmann::json& report);

// Schema the report conforms to, as shipped in schema/report.schema.json.
const char* report_schema_version();

} // namespace divlink
