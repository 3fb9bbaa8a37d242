#include "ucdmerge/merger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ucdmerge {

std::string to_string(ActionKind kind) {
    switch (kind) {
        case ActionKind::UnifiedSynonyms: return "unified-synonyms";
        case ActionKind::RenamedHomonym: return "renamed-homonym";
        case ActionKind::CopiedUnmapped: return "copied-unmapped";
        case ActionKind::AttributeTypeClash: return "attribute-type-clash";
        case ActionKind::RelationKindConflict: return "relation-kind-conflict";
    }
    throw std::logic_error("unreachable action kind");
}

std::string to_string(SynonymPolicy policy) {
    return policy == SynonymPolicy::KeepLeftLabel ? "keep-left-label" : "keep-right-label";
}

std::string to_string(OriginSet origin) {
    switch (origin) {
        case OriginSet::Left: return "left";
        case OriginSet::Right: return "right";
        case OriginSet::Both: return "both";
    }
    throw std::logic_error("unreachable origin");
}

namespace {

struct PlannedClass {
    OriginSet origin = OriginSet::Left;
    const UmlClass* left_class = nullptr;
    const UmlClass* right_class = nullptr;
    std::string original;      // label before any renaming (left label for unified)
    std::string alias;         // right label of a unified pair, otherwise empty
    std::string desired;       // label the policies ask for
    std::string source_name;   // owning diagram, used for homonym qualification
    std::string final_label;
};

std::string uniquify(const std::string& desired, std::set<std::string>& taken) {
    std::string label = desired;
    for (int k = 2; taken.contains(label); ++k) label = desired + "#" + std::to_string(k);
    taken.insert(label);
    return label;
}

}  // namespace

IntegratedModel integrate(const ClassDiagram& left, const ClassDiagram& right, const ValidatedMappings& cov,
                          const ConflictCatalog& catalog) {
    if (!cov.accepted.is_injective()) throw std::invalid_argument("integrate: mapping set is not injective");
    for (const Mapping& m : cov.accepted.mappings) {
        if (!left.has_class(m.left))
            throw std::invalid_argument("integrate: mapping references unknown class '" + m.left + "' in '" +
                                        left.name + "'");
        if (!right.has_class(m.right))
            throw std::invalid_argument("integrate: mapping references unknown class '" + m.right + "' in '" +
                                        right.name + "'");
    }

    std::vector<Mapping> ordered = cov.accepted.mappings;
    std::sort(ordered.begin(), ordered.end(), mapping_order_less);
    std::set<std::string> mapped_left;
    std::set<std::string> mapped_right;
    for (const Mapping& m : ordered) {
        mapped_left.insert(m.left);
        mapped_right.insert(m.right);
    }

    std::vector<PlannedClass> plan;
    for (const Mapping& m : ordered) {
        PlannedClass p;
        p.origin = OriginSet::Both;
        p.left_class = left.find_class(m.left);
        p.right_class = right.find_class(m.right);
        p.original = m.left;
        p.alias = m.right;
        p.desired = catalog.synonym == SynonymPolicy::KeepLeftLabel ? m.left : m.right;
        plan.push_back(std::move(p));
    }
    for (const UmlClass& c : left.classes) {
        if (mapped_left.contains(c.name)) continue;
        plan.push_back({OriginSet::Left, &c, nullptr, c.name, "", c.name, left.name, ""});
    }
    for (const UmlClass& c : right.classes) {
        if (mapped_right.contains(c.name)) continue;
        plan.push_back({OriginSet::Right, nullptr, &c, c.name, "", c.name, right.name, ""});
    }

    std::map<std::string, int> label_uses;
    for (const PlannedClass& p : plan) ++label_uses[p.desired];

    IntegratedModel model;
    std::set<std::string> taken;
    for (PlannedClass& p : plan) {
        std::string desired = p.desired;
        // Unified classes keep their policy label; clashing unmapped classes
        // get qualified with their diagram of origin.
        if (p.origin != OriginSet::Both && label_uses[p.desired] > 1) desired = p.source_name + "." + p.original;
        p.final_label = uniquify(desired, taken);

        ResolutionAction action;
        if (p.origin == OriginSet::Both) {
            action.kind = ActionKind::UnifiedSynonyms;
            action.subjects = {p.original, p.alias};
        } else if (p.final_label != p.original) {
            action.kind = ActionKind::RenamedHomonym;
            action.subjects = {p.source_name, p.original};
        } else {
            action.kind = ActionKind::CopiedUnmapped;
            action.subjects = {p.original};
        }
        action.result = p.final_label;
        model.actions.push_back(std::move(action));
    }

    for (const PlannedClass& p : plan) {
        UmlClass merged;
        merged.name = p.final_label;
        if (p.left_class) {
            merged.attributes = p.left_class->attributes;
            merged.operations = p.left_class->operations;
        }
        if (p.right_class) {
            for (const UmlAttribute& attr : p.right_class->attributes) {
                const auto it = std::find_if(merged.attributes.begin(), merged.attributes.end(),
                                             [&](const UmlAttribute& a) { return a.name == attr.name; });
                if (it == merged.attributes.end()) {
                    merged.attributes.push_back(attr);
                } else if (it->type_name != attr.type_name) {
                    model.actions.push_back({ActionKind::AttributeTypeClash,
                                             {p.final_label, attr.name, it->type_name, attr.type_name},
                                             p.final_label});
                }
            }
            for (const std::string& op : p.right_class->operations)
                if (std::find(merged.operations.begin(), merged.operations.end(), op) == merged.operations.end())
                    merged.operations.push_back(op);
        }
        model.provenance[p.final_label] = p.origin;
        model.diagram.classes.push_back(std::move(merged));
    }

    std::map<std::string, std::string> left_final;
    std::map<std::string, std::string> right_final;
    for (const PlannedClass& p : plan) {
        if (p.origin != OriginSet::Right) left_final[p.original] = p.final_label;
        if (p.origin == OriginSet::Both) right_final[p.alias] = p.final_label;
        if (p.origin == OriginSet::Right) right_final[p.original] = p.final_label;
    }

    std::set<UmlRelationship> seen;
    // Kinds each side contributes per rewritten (source, target) pair, used
    // to flag cross-side disagreement.
    std::map<std::pair<std::string, std::string>, std::pair<std::set<RelationKind>, std::set<RelationKind>>> by_ends;
    const auto add_edges = [&](const std::vector<UmlRelationship>& edges,
                               const std::map<std::string, std::string>& names, bool from_left) {
        for (const UmlRelationship& e : edges) {
            const UmlRelationship rewritten{names.at(e.source), names.at(e.target), e.kind};
            if (seen.insert(rewritten).second) model.diagram.relationships.push_back(rewritten);
            auto& sides = by_ends[{rewritten.source, rewritten.target}];
            (from_left ? sides.first : sides.second).insert(rewritten.kind);
        }
    };
    add_edges(left.relationships, left_final, true);
    add_edges(right.relationships, right_final, false);

    for (const auto& [ends, sides] : by_ends) {
        const auto& [from_left, from_right] = sides;
        if (from_left.empty() || from_right.empty()) continue;
        const bool left_extra = !std::includes(from_right.begin(), from_right.end(), from_left.begin(), from_left.end());
        const bool right_extra = !std::includes(from_left.begin(), from_left.end(), from_right.begin(), from_right.end());
        if (!left_extra || !right_extra) continue;
        ResolutionAction action;
        action.kind = ActionKind::RelationKindConflict;
        action.subjects = {ends.first, ends.second};
        std::set<RelationKind> all = from_left;
        all.insert(from_right.begin(), from_right.end());
        for (const RelationKind kind : all) action.subjects.emplace_back(to_string(kind));
        action.result = ends.first;
        model.actions.push_back(std::move(action));
    }

    model.diagram.name = left.name + "+" + right.name;
    check_diagram(model.diagram);
    return model;
}

IntegratedModel integrate_n(const std::vector<ClassDiagram>& diagrams, const std::vector<ValidatedMappings>& covs,
                            const ConflictCatalog& catalog) {
    if (diagrams.empty()) throw std::invalid_argument("integrate_n: at least one diagram required");
    if (covs.size() + 1 != diagrams.size())
        throw std::invalid_argument("integrate_n: expected " + std::to_string(diagrams.size() - 1) +
                                    " mapping sets, got " + std::to_string(covs.size()));
    IntegratedModel acc;
    acc.diagram = diagrams.front();
    for (const UmlClass& c : acc.diagram.classes) acc.provenance[c.name] = OriginSet::Left;
    for (std::size_t step = 0; step < covs.size(); ++step) {
        IntegratedModel next = integrate(acc.diagram, diagrams[step + 1], covs[step], catalog);
        // Keep the whole action history; provenance stays relative to the
        // latest step (left = everything merged so far).
        next.actions.insert(next.actions.begin(), acc.actions.begin(), acc.actions.end());
        acc = std::move(next);
    }
    return acc;
}

}  // namespace ucdmerge
