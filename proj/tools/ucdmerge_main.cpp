#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ucdmerge/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Merges UML class diagrams (.ucd) by aligning, validating, and unifying their concepts"};
    app.require_subcommand(1);

    std::string left;
    std::string right;
    std::vector<std::string> more;
    std::string lexicon;
    std::string mappings;
    std::string config;
    double threshold = 0.8;
    bool strict = false;
    bool plain = false;
    std::string out;
    std::string report;
    std::size_t cap = ucdmerge::kDefaultOracleCap;

    CLI::App* integrate = app.add_subcommand("integrate", "Match, validate, partition, and merge diagrams");
    integrate->add_option("--left", left, "First input diagram")->required();
    integrate->add_option("--right", right, "Second input diagram")->required();
    integrate->add_option("--more", more, "Further diagrams, folded in after the first two");
    integrate->add_option("--lexicon", lexicon, "Synonym lexicon (tab-separated pairs)");
    integrate->add_option("--mappings", mappings, "Pre-computed mappings (JSON); replaces the matching step");
    integrate->add_option("--config", config, "JSON config file; explicit flags still win");
    integrate->add_option("--threshold", threshold, "Similarity acceptance threshold in (0,1], default 0.8");
    integrate->add_flag("--strict", strict, "Treat warning-level violations as failures");
    integrate->add_flag("--plain-graph", plain, "Walk graphs ignoring relation types and orientations");
    integrate->add_option("--out", out, "Path for the merged diagram")->required();
    integrate->add_option("--report", report, "Path for the JSON report")->required();

    CLI::App* verify = app.add_subcommand("verify", "Cross-check the engine against exhaustive enumeration");
    verify->add_option("--left", left, "First input diagram")->required();
    verify->add_option("--right", right, "Second input diagram")->required();
    verify->add_option("--lexicon", lexicon, "Synonym lexicon (tab-separated pairs)");
    verify->add_option("--config", config, "JSON config file; explicit flags still win");
    verify->add_option("--threshold", threshold, "Similarity acceptance threshold in (0,1], default 0.8");
    verify->add_flag("--plain-graph", plain, "Walk graphs ignoring relation types and orientations");
    verify->add_option("--cap", cap, "Largest mapping count the exhaustive check will attempt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ucdmerge::kExitIoError;
    }

    CLI::App* active = app.get_subcommands().front();
    ucdmerge::PipelineConfig cfg;
    cfg.inputs.emplace_back(left);
    cfg.inputs.emplace_back(right);
    for (const std::string& path : more) cfg.inputs.emplace_back(path);
    if (!config.empty()) {
        try {
            ucdmerge::apply_config_file(cfg, config);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return ucdmerge::kExitIoError;
        }
    }
    if (!lexicon.empty()) cfg.lexicon_path = lexicon;
    if (!mappings.empty()) cfg.mappings_path = mappings;
    if (active->count("--threshold") > 0) cfg.similarity.threshold = threshold;
    if (strict) cfg.strict = true;
    if (plain) cfg.graph_mode = ucdmerge::GraphMode::Plain;

    if (active == verify) {
        cfg.oracle_cap = cap;
        return ucdmerge::run_verify(cfg);
    }
    cfg.out_path = out;
    cfg.report_path = report;
    return ucdmerge::run_pipeline(cfg);
}
