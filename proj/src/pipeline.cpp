#include "ucdmerge/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ucdmerge/matcher.hpp"
#include "ucdmerge/ontology.hpp"

namespace ucdmerge {

namespace {

using Json = nlohmann::ordered_json;

constexpr RuleId kAllRuleIds[] = {RuleId::Cycle, RuleId::RedundantSubsumption, RuleId::MultipleCorrespondence};

std::string combiner_name(Combiner combiner) {
    return combiner == Combiner::Max ? "max" : "weighted-average";
}

Combiner parse_combiner(const std::string& name) {
    if (name == "max") return Combiner::Max;
    if (name == "weighted-average") return Combiner::WeightedAverage;
    throw std::runtime_error("unknown combiner '" + name + "' (expected 'max' or 'weighted-average')");
}

GraphMode parse_graph_mode(const std::string& name) {
    if (name == "typed") return GraphMode::Typed;
    if (name == "plain") return GraphMode::Plain;
    throw std::runtime_error("unknown graph mode '" + name + "' (expected 'typed' or 'plain')");
}

SynonymPolicy parse_synonym_policy(const std::string& name) {
    if (name == "keep-left-label") return SynonymPolicy::KeepLeftLabel;
    if (name == "keep-right-label") return SynonymPolicy::KeepRightLabel;
    throw std::runtime_error("unknown synonym policy '" + name + "'");
}

RuleId parse_rule_id(const std::string& name) {
    for (const RuleId id : kAllRuleIds)
        if (to_string(id) == name) return id;
    throw std::runtime_error("unknown validation rule '" + name + "'");
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

Json mapping_json(const Mapping& m) {
    return Json{{"left", m.left}, {"right", m.right}, {"score", m.score}, {"relation", to_string(m.relation)}};
}

Json mapping_ref(const Mapping& m) { return Json{{"left", m.left}, {"right", m.right}}; }

Json edge_json(const ConceptRelationship& e) {
    return Json{{"source", e.source}, {"target", e.target}, {"type", std::string(to_string(e.type))}};
}

Json config_json(const PipelineConfig& cfg) {
    Json j;
    j["inputs"] = Json::array();
    for (const std::filesystem::path& p : cfg.inputs) j["inputs"].push_back(p.string());
    j["lexicon"] = cfg.lexicon_path ? Json(cfg.lexicon_path->string()) : Json(nullptr);
    j["mappings"] = cfg.mappings_path ? Json(cfg.mappings_path->string()) : Json(nullptr);
    j["out"] = cfg.out_path.string();
    j["report"] = cfg.report_path.string();
    j["threshold"] = cfg.similarity.threshold;
    j["combiner"] = combiner_name(cfg.similarity.combiner);
    j["weights"] = Json{{"edit", cfg.similarity.weights.edit},
                        {"trigram", cfg.similarity.weights.trigram},
                        {"synonym", cfg.similarity.weights.synonym}};
    Json rules = Json::object();
    for (const RuleId id : kAllRuleIds) {
        const auto it = std::find_if(cfg.rules.begin(), cfg.rules.end(),
                                     [&](const ValidationRule& r) { return r.id == id; });
        rules[to_string(id)] = it == cfg.rules.end() ? "off" : to_string(it->severity);
    }
    j["rules"] = std::move(rules);
    j["synonymPolicy"] = to_string(cfg.catalog.synonym);
    j["homonymPolicy"] = "qualify-with-diagram-name";
    j["attributeMerge"] = "union-by-name";
    j["graphMode"] = to_string(cfg.graph_mode);
    j["strict"] = cfg.strict;
    return j;
}

struct ReportBuilder {
    Json mappings = Json::array();
    Json violations = Json::array();
    Json classes = Json::array();
    Json max_subgraphs = Json::array();
    Json actions = Json::array();
    Json config = Json::object();
    std::vector<std::string> errors;
    Json timings = Json::object();

    Json finish() const {
        Json report;
        report["mappings"] = mappings;
        report["violations"] = violations;
        report["classes"] = classes;
        report["maxSubgraphs"] = max_subgraphs;
        report["actions"] = actions;
        report["config"] = config;
        report["errors"] = errors;
        report["timings"] = timings;
        return report;
    }
};

std::vector<Mapping> parse_mappings_json(const Json& doc) {
    const Json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("mappings")) throw std::runtime_error("mappings file: missing 'mappings' key");
        list = &doc.at("mappings");
    }
    if (!list->is_array()) throw std::runtime_error("mappings file: expected an array of mappings");
    std::vector<Mapping> out;
    for (const Json& item : *list) {
        if (!item.is_object() || !item.contains("left") || !item.contains("right"))
            throw std::runtime_error("mappings file: every mapping needs 'left' and 'right'");
        Mapping m;
        m.left = item.at("left").get<std::string>();
        m.right = item.at("right").get<std::string>();
        m.score = item.contains("score") ? item.at("score").get<double>() : 1.0;
        if (item.contains("relation")) {
            const std::string rel = item.at("relation").get<std::string>();
            if (rel == "equivalence")
                m.relation = MappingRelation::Equivalence;
            else if (rel == "is-a")
                m.relation = MappingRelation::IsA;
            else
                throw std::runtime_error("mappings file: unknown relation '" + rel + "'");
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Mapping> load_mappings_file(const std::filesystem::path& path) {
    Json doc;
    try {
        doc = Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return parse_mappings_json(doc);
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

void PipelineConfig::check() const {
    if (inputs.size() < 2) throw std::invalid_argument("at least two input diagrams are required");
    similarity.check();
    std::set<RuleId> ids;
    for (const ValidationRule& rule : rules)
        if (!ids.insert(rule.id).second)
            throw std::invalid_argument("validation rule '" + to_string(rule.id) + "' configured twice");
    if (mappings_path && inputs.size() != 2)
        throw std::invalid_argument("imported mappings only apply to two-input runs");
}

void apply_config_file(PipelineConfig& cfg, const std::filesystem::path& path) {
    Json doc;
    try {
        doc = Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw std::runtime_error(path.string() + ": config must be a JSON object");
    try {
        if (doc.contains("threshold")) cfg.similarity.threshold = doc.at("threshold").get<double>();
        if (doc.contains("combiner")) cfg.similarity.combiner = parse_combiner(doc.at("combiner").get<std::string>());
        if (doc.contains("weights")) {
            const Json& w = doc.at("weights");
            if (w.contains("edit")) cfg.similarity.weights.edit = w.at("edit").get<double>();
            if (w.contains("trigram")) cfg.similarity.weights.trigram = w.at("trigram").get<double>();
            if (w.contains("synonym")) cfg.similarity.weights.synonym = w.at("synonym").get<double>();
        }
        if (doc.contains("rules")) {
            for (const auto& [name, value] : doc.at("rules").items()) {
                const RuleId id = parse_rule_id(name);
                const std::string severity = value.get<std::string>();
                const auto it = std::find_if(cfg.rules.begin(), cfg.rules.end(),
                                             [&](const ValidationRule& r) { return r.id == id; });
                if (severity == "off") {
                    if (it != cfg.rules.end()) cfg.rules.erase(it);
                } else if (severity == "reject" || severity == "warn") {
                    const Severity s = severity == "reject" ? Severity::Reject : Severity::Warn;
                    if (it != cfg.rules.end())
                        it->severity = s;
                    else
                        cfg.rules.push_back({id, s});
                } else {
                    throw std::runtime_error("rule '" + name + "': expected 'reject', 'warn', or 'off'");
                }
            }
        }
        if (doc.contains("synonymPolicy"))
            cfg.catalog.synonym = parse_synonym_policy(doc.at("synonymPolicy").get<std::string>());
        if (doc.contains("graphMode")) cfg.graph_mode = parse_graph_mode(doc.at("graphMode").get<std::string>());
        if (doc.contains("strict")) cfg.strict = doc.at("strict").get<bool>();
    } catch (const Json::exception& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

ValidatedMappings preintegration(const ClassDiagram& bc1, const ClassDiagram& bc2, const Lexicon& lexicon,
                                 const PipelineConfig& cfg) {
    const Ontology o1 = transform_diagram(bc1);
    const Ontology o2 = transform_diagram(bc2);
    const MappingSet matched = match_ontologies(o1, o2, cfg.similarity, lexicon);
    return validate(matched, o1, o2, cfg.rules);
}

int run_pipeline(const PipelineConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    try {
        cfg.check();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }

    ReportBuilder report;
    report.config = config_json(cfg);
    Json step_timings = Json::array();

    const auto record_error = [&](const std::string& message) {
        report.errors.push_back(message);
        std::cerr << "error: " << message << "\n";
    };
    const auto finish = [&](int code) {
        report.timings["totalMs"] = elapsed_ms(start);
        report.timings["steps"] = step_timings;
        try {
            write_text_file(cfg.report_path, report.finish().dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            if (code == kExitSuccess) return kExitIoError;
        }
        return code;
    };

    std::vector<ClassDiagram> diagrams;
    for (const std::filesystem::path& path : cfg.inputs) {
        try {
            diagrams.push_back(parse_diagram_file(path));
        } catch (const std::exception& e) {
            record_error(path.string() + ": " + e.what());
            return finish(kExitIoError);
        }
    }

    Lexicon lexicon;
    if (cfg.lexicon_path) {
        try {
            lexicon = Lexicon::load(*cfg.lexicon_path);
        } catch (const std::exception& e) {
            record_error(cfg.lexicon_path->string() + ": " + e.what());
            return finish(kExitIoError);
        }
    }

    std::vector<Mapping> imported;
    if (cfg.mappings_path) {
        try {
            imported = load_mappings_file(*cfg.mappings_path);
        } catch (const std::exception& e) {
            record_error(e.what());
            return finish(kExitIoError);
        }
    }

    ClassDiagram current = diagrams.front();
    bool strict_failure = false;
    for (std::size_t step = 0; step + 1 < diagrams.size(); ++step) {
        const auto step_start = std::chrono::steady_clock::now();
        const ClassDiagram& next = diagrams[step + 1];
        const Ontology o1 = transform_diagram(current);
        const Ontology o2 = transform_diagram(next);

        MappingSet matched;
        if (cfg.mappings_path && step == 0) {
            matched.left_ontology_id = o1.id;
            matched.right_ontology_id = o2.id;
            matched.mappings = imported;
            bool unknown = false;
            for (const Mapping& m : matched.mappings) {
                if (!o1.has_concept(m.left)) {
                    record_error("imported mapping (" + m.left + ", " + m.right + "): no concept '" + m.left +
                                 "' in '" + o1.id + "'");
                    unknown = true;
                }
                if (!o2.has_concept(m.right)) {
                    record_error("imported mapping (" + m.left + ", " + m.right + "): no concept '" + m.right +
                                 "' in '" + o2.id + "'");
                    unknown = true;
                }
            }
            if (unknown) return finish(kExitSemanticFailure);
        } else {
            matched = match_ontologies(o1, o2, cfg.similarity, lexicon);
        }

        const ValidatedMappings cov = validate(matched, o1, o2, cfg.rules);

        for (const Mapping& m : matched.mappings) {
            Json jm;
            jm["step"] = step;
            jm.update(mapping_json(m));
            jm["accepted"] = cov.accepted.contains(m.left, m.right);
            report.mappings.push_back(std::move(jm));
        }
        for (const Violation& v : cov.violations) {
            Json jv;
            jv["step"] = step;
            jv["rule"] = to_string(v.rule);
            jv["involved"] = Json::array();
            for (const Mapping& m : v.involved) jv["involved"].push_back(mapping_json(m));
            jv["explanation"] = v.explanation;
            jv["dropped"] = v.dropped ? mapping_ref(*v.dropped) : Json(nullptr);
            report.violations.push_back(std::move(jv));
        }

        const std::size_t warn_count =
            std::count_if(cov.violations.begin(), cov.violations.end(),
                          [](const Violation& v) { return !v.dropped.has_value(); });
        if (cfg.strict && warn_count > 0) {
            strict_failure = true;
            record_error("strict mode: " + std::to_string(warn_count) + " warning(s) at step " +
                         std::to_string(step));
        }

        const ClassPartition partition = equivalence_classes(cov.accepted, o1, o2, cfg.graph_mode);
        for (const EquivalenceClass& cls : partition.classes) {
            const EcfResult layered = ecf(cls.representative(), cov.accepted, o1, o2, cfg.graph_mode);
            Json jc;
            jc["step"] = step;
            jc["representative"] = mapping_ref(cls.representative());
            jc["rank"] = layered.rank;
            jc["members"] = Json::array();
            for (const Mapping& m : cls.members) jc["members"].push_back(mapping_ref(m));
            report.classes.push_back(std::move(jc));
        }
        for (const SubgraphPair& pair : to_max_subgraphs(partition, o1, o2, cfg.graph_mode)) {
            Json jp;
            jp["step"] = step;
            jp["leftConcepts"] = pair.left_concepts;
            jp["rightConcepts"] = pair.right_concepts;
            jp["correspondence"] = Json::array();
            for (const auto& [l, r] : pair.correspondence) jp["correspondence"].push_back(Json::array({l, r}));
            jp["edges"] = Json::array();
            for (const auto& [e1, e2] : pair.edges)
                jp["edges"].push_back(Json{{"left", edge_json(e1)}, {"right", edge_json(e2)}});
            report.max_subgraphs.push_back(std::move(jp));
        }

        IntegratedModel model;
        try {
            model = integrate(current, next, cov, cfg.catalog);
        } catch (const std::exception& e) {
            record_error(e.what());
            return finish(kExitSemanticFailure);
        }
        for (const ResolutionAction& action : model.actions) {
            Json ja;
            ja["step"] = step;
            ja["kind"] = to_string(action.kind);
            ja["subjects"] = action.subjects;
            ja["result"] = action.result;
            report.actions.push_back(std::move(ja));
        }
        current = std::move(model.diagram);
        step_timings.push_back(elapsed_ms(step_start));
    }

    if (!strict_failure) {
        try {
            write_text_file(cfg.out_path, serialize_diagram(current));
        } catch (const std::exception& e) {
            record_error(e.what());
            return finish(kExitIoError);
        }
    }
    return finish(strict_failure ? kExitSemanticFailure : kExitSuccess);
}

int run_verify(const PipelineConfig& cfg) {
    try {
        cfg.check();
        if (cfg.inputs.size() != 2) throw std::invalid_argument("verify needs exactly two input diagrams");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }

    ClassDiagram left;
    ClassDiagram right;
    Lexicon lexicon;
    try {
        left = parse_diagram_file(cfg.inputs[0]);
        right = parse_diagram_file(cfg.inputs[1]);
        if (cfg.lexicon_path) lexicon = Lexicon::load(*cfg.lexicon_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }

    const Ontology o1 = transform_diagram(left);
    const Ontology o2 = transform_diagram(right);
    const MappingSet matched = match_ontologies(o1, o2, cfg.similarity, lexicon);
    const ValidatedMappings cov = validate(matched, o1, o2, cfg.rules);

    std::vector<SubgraphPair> engine =
        to_max_subgraphs(equivalence_classes(cov.accepted, o1, o2, cfg.graph_mode), o1, o2, cfg.graph_mode);
    std::sort(engine.begin(), engine.end());

    std::vector<SubgraphPair> reference;
    try {
        reference = maximal_elements(enumerate_iso_pairs(o1, o2, cov.accepted, cfg.graph_mode, cfg.oracle_cap));
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemanticFailure;
    }
    // The exhaustive reference always contains the empty pair; the engine
    // partitions mappings, so it reports nothing for an empty mapping set.
    std::erase_if(reference, [](const SubgraphPair& p) { return p.correspondence.empty(); });
    std::sort(reference.begin(), reference.end());

    std::cout << "mappings: " << cov.accepted.mappings.size() << "\n"
              << "engine maximal pairs: " << engine.size() << "\n"
              << "reference maximal pairs: " << reference.size() << "\n";
    if (engine == reference) {
        std::cout << "verify: engine and exhaustive reference agree\n";
        return kExitSuccess;
    }
    std::cerr << "verify: MISMATCH between engine and exhaustive reference\n";
    return kExitSemanticFailure;
}

}  // namespace ucdmerge
