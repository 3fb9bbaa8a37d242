#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "test_support.hpp"
#include "ucdmerge/pipeline.hpp"

using namespace ucdmerge;
using Json = nlohmann::ordered_json;

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

Json load_report(const std::filesystem::path& path) { return Json::parse(test::read_file(path)); }

PipelineConfig golden_config(const test::TempDir& dir) {
    PipelineConfig cfg;
    cfg.inputs = {test::fixture_path("g1.ucd"), test::fixture_path("g2.ucd")};
    cfg.lexicon_path = test::fixture_path("lexicon.tsv");
    cfg.out_path = dir.file("merged.ucd");
    cfg.report_path = dir.file("report.json");
    return cfg;
}

// Two diagrams whose identity-matched mappings trip the redundancy warning:
// the left declares Child directly under Parent, the right interposes Mid.
void write_warn_pair(const test::TempDir& dir) {
    write_file(dir.file("lw.ucd"),
               "diagram \"LW\"\n"
               "class \"Parent\"\n"
               "class \"Child\"\n"
               "inherit \"Child\" \"Parent\"\n");
    write_file(dir.file("rw.ucd"),
               "diagram \"RW\"\n"
               "class \"Parent\"\n"
               "class \"Child\"\n"
               "class \"Mid\"\n"
               "inherit \"Child\" \"Mid\"\n"
               "inherit \"Mid\" \"Parent\"\n");
}

PipelineConfig warn_config(const test::TempDir& dir) {
    PipelineConfig cfg;
    cfg.inputs = {dir.file("lw.ucd"), dir.file("rw.ucd")};
    cfg.out_path = dir.file("merged.ucd");
    cfg.report_path = dir.file("report.json");
    return cfg;
}

}  // namespace

TEST_CASE("the bilingual fixtures run end to end") {
    const test::TempDir dir;
    const PipelineConfig cfg = golden_config(dir);
    REQUIRE(run_pipeline(cfg) == kExitSuccess);

    const ClassDiagram merged = parse_diagram_file(cfg.out_path);
    CHECK(merged.name == "G1+G2");
    CHECK(merged.classes.size() == 13);
    CHECK(merged.relationships.size() == 14);

    const Json report = load_report(cfg.report_path);
    REQUIRE(report.at("mappings").size() == 9);
    for (const Json& m : report.at("mappings")) {
        CHECK(m.at("step") == 0);
        CHECK(m.at("accepted") == true);
        CHECK(m.at("score").get<double>() == doctest::Approx(1.0));
        CHECK(m.at("relation") == "equivalence");
    }
    CHECK(report.at("violations").empty());
    CHECK(report.at("errors").empty());

    REQUIRE(report.at("classes").size() == 3);
    CHECK(report.at("classes")[0].at("representative").at("left") == "Cache");
    CHECK(report.at("classes")[0].at("rank") == 4);
    CHECK(report.at("classes")[0].at("members").size() == 6);
    CHECK(report.at("classes")[1].at("representative").at("left") == "Hard disk");
    CHECK(report.at("classes")[1].at("rank") == 2);
    CHECK(report.at("classes")[2].at("representative").at("left") == "Monitor");
    CHECK(report.at("classes")[2].at("rank") == 1);

    REQUIRE(report.at("maxSubgraphs").size() == 3);
    CHECK(report.at("maxSubgraphs")[0].at("leftConcepts").size() == 6);
    CHECK(report.at("maxSubgraphs")[0].at("edges").size() == 5);
    CHECK(report.at("maxSubgraphs")[1].at("edges").size() == 1);
    CHECK(report.at("maxSubgraphs")[2].at("leftConcepts") == Json::array({"Monitor"}));
    CHECK(report.at("maxSubgraphs")[2].at("rightConcepts") == Json::array({"Ecran"}));
    CHECK(report.at("maxSubgraphs")[2].at("edges").empty());

    CHECK(report.at("actions").size() == 13);

    const Json& config = report.at("config");
    CHECK(config.at("threshold").get<double>() == doctest::Approx(0.8));
    CHECK(config.at("combiner") == "max");
    CHECK(config.at("rules").at("cycle") == "reject");
    CHECK(config.at("rules").at("redundant-subsumption") == "warn");
    CHECK(config.at("rules").at("multiple-correspondence") == "reject");
    CHECK(config.at("synonymPolicy") == "keep-left-label");
    CHECK(config.at("graphMode") == "typed");
    CHECK(config.at("strict") == false);

    CHECK(report.at("timings").contains("totalMs"));
    CHECK(report.at("timings").at("steps").size() == 1);
}

TEST_CASE("repeated runs are byte-identical up to timings") {
    const test::TempDir dir1;
    const test::TempDir dir2;
    const PipelineConfig cfg1 = golden_config(dir1);
    const PipelineConfig cfg2 = golden_config(dir2);
    REQUIRE(run_pipeline(cfg1) == kExitSuccess);
    REQUIRE(run_pipeline(cfg2) == kExitSuccess);

    CHECK(test::read_file(cfg1.out_path) == test::read_file(cfg2.out_path));

    Json r1 = load_report(cfg1.report_path);
    Json r2 = load_report(cfg2.report_path);
    r1.erase("timings");
    r2.erase("timings");
    // The configs embed their own paths; make them comparable.
    r1.at("config") = Json::object();
    r2.at("config") = Json::object();
    CHECK(r1.dump(2) == r2.dump(2));
}

TEST_CASE("a run without the lexicon only unifies identical labels") {
    const test::TempDir dir;
    PipelineConfig cfg = golden_config(dir);
    cfg.lexicon_path.reset();
    REQUIRE(run_pipeline(cfg) == kExitSuccess);

    const Json report = load_report(cfg.report_path);
    CHECK(report.at("mappings").size() == 4);
    CHECK(parse_diagram_file(cfg.out_path).classes.size() == 18);  // 11 + 11 - 4
}

TEST_CASE("a missing input aborts with an error report") {
    const test::TempDir dir;
    PipelineConfig cfg = golden_config(dir);
    cfg.inputs[0] = dir.file("absent.ucd");
    CHECK(run_pipeline(cfg) == kExitIoError);

    const Json report = load_report(cfg.report_path);
    CHECK(report.at("errors").size() == 1);
    CHECK(report.at("mappings").empty());
    CHECK_FALSE(std::filesystem::exists(cfg.out_path));
}

TEST_CASE("a malformed diagram aborts with the parse position in the report") {
    const test::TempDir dir;
    write_file(dir.file("bad.ucd"), "diagram \"B\"\nclass \"X\"\nclass \"X\"\n");
    PipelineConfig cfg = golden_config(dir);
    cfg.inputs[0] = dir.file("bad.ucd");
    CHECK(run_pipeline(cfg) == kExitIoError);

    const Json report = load_report(cfg.report_path);
    REQUIRE(report.at("errors").size() == 1);
    const std::string message = report.at("errors")[0].get<std::string>();
    CHECK(message.find("line 3") != std::string::npos);
    CHECK(message.find("duplicate class") != std::string::npos);
}

TEST_CASE("a broken lexicon file aborts the run") {
    const test::TempDir dir;
    write_file(dir.file("broken.tsv"), "monitor ecran\n");  // space, not tab
    PipelineConfig cfg = golden_config(dir);
    cfg.lexicon_path = dir.file("broken.tsv");
    CHECK(run_pipeline(cfg) == kExitIoError);
    CHECK_FALSE(load_report(cfg.report_path).at("errors").empty());
}

TEST_CASE("warnings are reported but harmless unless strict") {
    const test::TempDir dir;
    write_warn_pair(dir);
    const PipelineConfig cfg = warn_config(dir);
    REQUIRE(run_pipeline(cfg) == kExitSuccess);

    const Json report = load_report(cfg.report_path);
    REQUIRE(report.at("violations").size() == 1);
    const Json& v = report.at("violations")[0];
    CHECK(v.at("rule") == "redundant-subsumption");
    CHECK(v.at("dropped").is_null());
    CHECK(v.at("involved").size() == 2);
    CHECK(report.at("errors").empty());
    CHECK(std::filesystem::exists(cfg.out_path));
    CHECK(parse_diagram_file(cfg.out_path).classes.size() == 3);  // 2 + 3 - 2
}

TEST_CASE("strict mode turns warnings into a failing run without output") {
    const test::TempDir dir;
    write_warn_pair(dir);
    PipelineConfig cfg = warn_config(dir);
    cfg.strict = true;
    CHECK(run_pipeline(cfg) == kExitSemanticFailure);

    const Json report = load_report(cfg.report_path);
    CHECK(report.at("violations").size() == 1);
    CHECK_FALSE(report.at("errors").empty());
    CHECK_FALSE(std::filesystem::exists(cfg.out_path));
}

TEST_CASE("a config file can promote the warning to a repairing rejection") {
    const test::TempDir dir;
    write_warn_pair(dir);
    write_file(dir.file("config.json"), R"({"rules": {"redundant-subsumption": "reject"}})");

    PipelineConfig cfg = warn_config(dir);
    apply_config_file(cfg, dir.file("config.json"));
    REQUIRE(run_pipeline(cfg) == kExitSuccess);

    const Json report = load_report(cfg.report_path);
    REQUIRE(report.at("violations").size() == 1);
    CHECK(report.at("violations")[0].at("dropped").at("left") == "Parent");
    CHECK(report.at("config").at("rules").at("redundant-subsumption") == "reject");
    CHECK(parse_diagram_file(cfg.out_path).classes.size() == 4);  // 2 + 3 - 1
}

TEST_CASE("config files override only the keys they mention") {
    PipelineConfig cfg;
    const test::TempDir dir;
    write_file(dir.file("config.json"), R"({
        "threshold": 0.5,
        "combiner": "weighted-average",
        "weights": {"trigram": 0.25},
        "rules": {"cycle": "warn", "multiple-correspondence": "off"},
        "synonymPolicy": "keep-right-label",
        "graphMode": "plain",
        "strict": true
    })");
    apply_config_file(cfg, dir.file("config.json"));

    CHECK(cfg.similarity.threshold == doctest::Approx(0.5));
    CHECK(cfg.similarity.combiner == Combiner::WeightedAverage);
    CHECK(cfg.similarity.weights.edit == doctest::Approx(1.0));  // untouched
    CHECK(cfg.similarity.weights.trigram == doctest::Approx(0.25));
    REQUIRE(cfg.rules.size() == 2);  // multiple-correspondence removed
    CHECK(cfg.rules[0].id == RuleId::Cycle);
    CHECK(cfg.rules[0].severity == Severity::Warn);
    CHECK(cfg.catalog.synonym == SynonymPolicy::KeepRightLabel);
    CHECK(cfg.graph_mode == GraphMode::Plain);
    CHECK(cfg.strict == true);
}

TEST_CASE("malformed config files are rejected") {
    PipelineConfig cfg;
    const test::TempDir dir;

    write_file(dir.file("bad.json"), "{not json");
    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("bad.json")), std::runtime_error);

    write_file(dir.file("array.json"), "[1, 2]");
    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("array.json")), std::runtime_error);

    write_file(dir.file("rule.json"), R"({"rules": {"no-such-rule": "warn"}})");
    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("rule.json")), std::runtime_error);

    write_file(dir.file("sev.json"), R"({"rules": {"cycle": "maybe"}})");
    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("sev.json")), std::runtime_error);

    write_file(dir.file("comb.json"), R"({"combiner": "median"})");
    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("comb.json")), std::runtime_error);

    CHECK_THROWS_AS(apply_config_file(cfg, dir.file("missing.json")), std::runtime_error);
}

TEST_CASE("imported mappings replace the matcher") {
    const test::TempDir dir;
    PipelineConfig cfg = golden_config(dir);
    cfg.lexicon_path.reset();
    cfg.mappings_path = dir.file("mappings.json");

    SUBCASE("bare array form with defaults") {
        write_file(dir.file("mappings.json"), R"([{"left": "Monitor", "right": "Ecran"}])");
        REQUIRE(run_pipeline(cfg) == kExitSuccess);
        const Json report = load_report(cfg.report_path);
        REQUIRE(report.at("mappings").size() == 1);
        CHECK(report.at("mappings")[0].at("left") == "Monitor");
        CHECK(report.at("mappings")[0].at("score").get<double>() == doctest::Approx(1.0));
        CHECK(report.at("mappings")[0].at("relation") == "equivalence");
        CHECK(report.at("mappings")[0].at("accepted") == true);
        CHECK(parse_diagram_file(cfg.out_path).classes.size() == 21);  // 11 + 11 - 1
    }

    SUBCASE("object form with explicit score and relation") {
        write_file(dir.file("mappings.json"),
                   R"({"mappings": [{"left": "Monitor", "right": "Ecran", "score": 0.9, "relation": "is-a"}]})");
        REQUIRE(run_pipeline(cfg) == kExitSuccess);
        const Json report = load_report(cfg.report_path);
        REQUIRE(report.at("mappings").size() == 1);
        CHECK(report.at("mappings")[0].at("score").get<double>() == doctest::Approx(0.9));
        CHECK(report.at("mappings")[0].at("relation") == "is-a");
    }

    SUBCASE("imported mappings still pass through validation") {
        write_file(dir.file("mappings.json"),
                   R"([{"left": "Monitor", "right": "Ecran", "score": 0.7},
                       {"left": "Monitor", "right": "Souris", "score": 0.6}])");
        REQUIRE(run_pipeline(cfg) == kExitSuccess);
        const Json report = load_report(cfg.report_path);
        REQUIRE(report.at("violations").size() == 1);
        CHECK(report.at("violations")[0].at("rule") == "multiple-correspondence");
        CHECK(report.at("violations")[0].at("dropped").at("right") == "Souris");
        REQUIRE(report.at("mappings").size() == 2);
        CHECK(report.at("mappings")[0].at("accepted") == true);
        CHECK(report.at("mappings")[1].at("accepted") == false);
    }

    SUBCASE("unknown concepts fail the run") {
        write_file(dir.file("mappings.json"), R"([{"left": "Monitor", "right": "Nope"}])");
        CHECK(run_pipeline(cfg) == kExitSemanticFailure);
        const Json report = load_report(cfg.report_path);
        CHECK_FALSE(report.at("errors").empty());
        CHECK_FALSE(std::filesystem::exists(cfg.out_path));
    }

    SUBCASE("malformed mapping files fail early") {
        write_file(dir.file("mappings.json"), R"([{"left": "Monitor"}])");
        CHECK(run_pipeline(cfg) == kExitIoError);
        CHECK_FALSE(load_report(cfg.report_path).at("errors").empty());
    }

    SUBCASE("imports require exactly two inputs") {
        cfg.inputs.push_back(test::fixture_path("g1.ucd"));
        write_file(dir.file("mappings.json"), R"([])");
        CHECK(run_pipeline(cfg) == kExitIoError);
        CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    }
}

TEST_CASE("fewer than two inputs is a usage error") {
    const test::TempDir dir;
    PipelineConfig cfg;
    cfg.inputs = {test::fixture_path("g1.ucd")};
    cfg.out_path = dir.file("merged.ucd");
    cfg.report_path = dir.file("report.json");
    CHECK(run_pipeline(cfg) == kExitIoError);
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
}

TEST_CASE("an unwritable report path downgrades an otherwise clean run") {
    const test::TempDir dir;
    PipelineConfig cfg = golden_config(dir);
    cfg.report_path = dir.file("no-such-dir") / "report.json";
    CHECK(run_pipeline(cfg) == kExitIoError);
}

TEST_CASE("three diagrams fold left with per-step records") {
    const test::TempDir dir;
    write_file(dir.file("a.ucd"), "diagram \"A\"\nclass \"Shared\"\nclass \"OnlyA\"\n");
    write_file(dir.file("b.ucd"), "diagram \"B\"\nclass \"Shared\"\nclass \"OnlyB\"\n");
    write_file(dir.file("c.ucd"), "diagram \"C\"\nclass \"OnlyC\"\n");

    PipelineConfig cfg;
    cfg.inputs = {dir.file("a.ucd"), dir.file("b.ucd"), dir.file("c.ucd")};
    cfg.out_path = dir.file("merged.ucd");
    cfg.report_path = dir.file("report.json");
    REQUIRE(run_pipeline(cfg) == kExitSuccess);

    const ClassDiagram merged = parse_diagram_file(cfg.out_path);
    CHECK(merged.name == "A+B+C");
    CHECK(merged.classes.size() == 4);  // Shared unified once, three singles

    const Json report = load_report(cfg.report_path);
    REQUIRE(report.at("mappings").size() == 1);
    CHECK(report.at("mappings")[0].at("step") == 0);
    CHECK(report.at("timings").at("steps").size() == 2);

    std::set<int> action_steps;
    for (const Json& a : report.at("actions")) action_steps.insert(a.at("step").get<int>());
    CHECK(action_steps == std::set<int>{0, 1});
}

TEST_CASE("preintegration bundles matching and validation") {
    const ClassDiagram g1 = parse_diagram_file(test::fixture_path("g1.ucd"));
    const ClassDiagram g2 = parse_diagram_file(test::fixture_path("g2.ucd"));
    const Lexicon lexicon = Lexicon::load(test::fixture_path("lexicon.tsv"));

    PipelineConfig cfg;
    cfg.inputs = {test::fixture_path("g1.ucd"), test::fixture_path("g2.ucd")};
    const ValidatedMappings cov = preintegration(g1, g2, lexicon, cfg);
    CHECK(cov.accepted.mappings.size() == 9);
    CHECK(cov.violations.empty());
    CHECK(cov.accepted.is_injective());
}

TEST_CASE("verify agrees with the exhaustive reference on the fixtures") {
    PipelineConfig cfg;
    cfg.inputs = {test::fixture_path("g1.ucd"), test::fixture_path("g2.ucd")};
    cfg.lexicon_path = test::fixture_path("lexicon.tsv");
    CHECK(run_verify(cfg) == kExitSuccess);

    SUBCASE("plain mode agrees too") {
        cfg.graph_mode = GraphMode::Plain;
        CHECK(run_verify(cfg) == kExitSuccess);
    }

    SUBCASE("a tiny enumeration cap is a reported failure") {
        cfg.oracle_cap = 4;  // nine mappings exceed it
        CHECK(run_verify(cfg) == kExitSemanticFailure);
    }

    SUBCASE("verify needs exactly two inputs") {
        cfg.inputs.push_back(test::fixture_path("g1.ucd"));
        CHECK(run_verify(cfg) == kExitIoError);
    }
}
