#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "ucdmerge/diagram.hpp"
#include "ucdmerge/lexicon.hpp"
#include "ucdmerge/merger.hpp"
#include "ucdmerge/oracle.hpp"
#include "ucdmerge/segments.hpp"
#include "ucdmerge/similarity.hpp"
#include "ucdmerge/validator.hpp"

namespace ucdmerge {

// Process-level outcomes, also used as the executable's exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitSemanticFailure = 1;  // violations in strict mode, bad imported mappings, verify mismatch
inline constexpr int kExitIoError = 2;          // unusable config, unreadable inputs, parse errors, unwritable outputs

struct PipelineConfig {
    std::vector<std::filesystem::path> inputs;  // two or more diagrams, merged left to right
    std::optional<std::filesystem::path> lexicon_path;
    std::optional<std::filesystem::path> mappings_path;  // pre-computed mappings, two-input runs only
    SimilarityConfig similarity;
    std::vector<ValidationRule> rules = default_rules();
    ConflictCatalog catalog;
    GraphMode graph_mode = GraphMode::Typed;
    bool strict = false;  // treat warn-level violations as failures
    std::filesystem::path out_path;
    std::filesystem::path report_path;
    std::size_t oracle_cap = kDefaultOracleCap;  // verify only

    // Throws std::invalid_argument on contradictory or incomplete settings
    // (fewer than two inputs, duplicate rule ids, bad similarity settings,
    // imported mappings with more than two inputs).
    void check() const;
};

// Overrides cfg's tunables with the values present in a JSON config file;
// keys that are absent keep their current value. Throws std::runtime_error
// on unreadable files or malformed content. See README for the schema.
void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path);

// Matching followed by validation between two diagrams: transform both,
// score and select mappings, then run the active rules.
ValidatedMappings preintegration(const ClassDiagram& bc1, const ClassDiagram& bc2, const Lexicon& lexicon,
                                 const PipelineConfig& cfg);

// Full run: parse inputs, fold them pairwise (match, validate, partition,
// integrate), write the merged diagram to out_path and the JSON report to
// report_path. Diagnostics go to stderr; every recorded error also lands in
// the report's errors section when the report can be written.
int run_pipeline(const PipelineConfig& cfg);

// Cross-check on two inputs: the segment engine's maximal subgraph pairs
// must equal the exhaustive oracle's. Prints a summary to stdout; no files
// are written.
int run_verify(const PipelineConfig& cfg);

}  // namespace ucdmerge
