#include "ucdmerge/validator.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace ucdmerge {

std::string to_string(RuleId id) {
    switch (id) {
        case RuleId::Cycle: return "cycle";
        case RuleId::RedundantSubsumption: return "redundant-subsumption";
        case RuleId::MultipleCorrespondence: return "multiple-correspondence";
    }
    throw std::logic_error("unreachable rule id");
}

std::string to_string(Severity severity) {
    return severity == Severity::Reject ? "reject" : "warn";
}

std::vector<ValidationRule> default_rules() {
    return {{RuleId::Cycle, Severity::Reject},
            {RuleId::RedundantSubsumption, Severity::Warn},
            {RuleId::MultipleCorrespondence, Severity::Reject}};
}

bool subsumes(const Ontology& o, const std::string& x, const std::string& y) {
    if (!o.has_concept(x)) throw std::invalid_argument("subsumes: unknown concept '" + x + "'");
    if (!o.has_concept(y)) throw std::invalid_argument("subsumes: unknown concept '" + y + "'");
    std::set<std::string> seen;
    std::queue<std::string> frontier;
    frontier.push(x);
    while (!frontier.empty()) {
        const std::string current = frontier.front();
        frontier.pop();
        for (const ConceptRelationship& edge : o.relationships) {
            if (edge.type != RelationType::Inheritance || edge.source != current) continue;
            if (edge.target == y) return true;
            if (seen.insert(edge.target).second) frontier.push(edge.target);
        }
    }
    return false;
}

namespace {

std::string mapping_repr(const Mapping& m) { return "(" + m.left + ", " + m.right + ")"; }

bool involved_less(const std::vector<Mapping>& a, const std::vector<Mapping>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mapping_order_less);
}

void sort_violations(std::vector<Violation>& violations) {
    std::stable_sort(violations.begin(), violations.end(),
                     [](const Violation& a, const Violation& b) { return involved_less(a.involved, b.involved); });
}

}  // namespace

std::vector<Violation> detect_cycles(const MappingSet& m, const Ontology& o1, const Ontology& o2) {
    std::vector<Violation> out;
    const auto& ms = m.mappings;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const Mapping* top = nullptr;     // the (A, M) role: left below, right above
            const Mapping* bottom = nullptr;  // the (B, O) role: left above, right below
            if (subsumes(o1, ms[i].left, ms[j].left) && subsumes(o2, ms[j].right, ms[i].right)) {
                top = &ms[i];
                bottom = &ms[j];
            } else if (subsumes(o1, ms[j].left, ms[i].left) && subsumes(o2, ms[i].right, ms[j].right)) {
                top = &ms[j];
                bottom = &ms[i];
            }
            if (!top) continue;
            Violation v;
            v.rule = RuleId::Cycle;
            v.involved = {*top, *bottom};
            v.explanation = "unifying " + mapping_repr(*top) + " and " + mapping_repr(*bottom) +
                            " closes an inheritance cycle: '" + top->left + "' is below '" + bottom->left +
                            "' on the left while '" + bottom->right + "' is below '" + top->right +
                            "' on the right";
            out.push_back(std::move(v));
        }
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> detect_redundant_subsumption(const MappingSet& m, const Ontology& o1, const Ontology& o2) {
    std::vector<Violation> out;
    for (const Mapping& parent : m.mappings) {
        for (const Mapping& child : m.mappings) {
            if (parent == child) continue;
            if (!o1.has_edge(child.left, parent.left, RelationType::Inheritance)) continue;
            if (o2.has_edge(child.right, parent.right, RelationType::Inheritance)) continue;
            if (!subsumes(o2, child.right, parent.right)) continue;
            Violation v;
            v.rule = RuleId::RedundantSubsumption;
            v.involved = {parent, child};
            v.explanation = "'" + child.left + "' is a direct subclass of '" + parent.left +
                            "' on the left, but '" + child.right + "' sits below '" + parent.right +
                            "' only indirectly on the right; unification would make the direct edge redundant";
            out.push_back(std::move(v));
        }
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> detect_multiple_correspondence(const MappingSet& m) {
    std::vector<Violation> out;
    const auto collect = [&](bool by_left) {
        std::map<std::string, std::vector<Mapping>> groups;
        for (const Mapping& mapping : m.mappings) groups[by_left ? mapping.left : mapping.right].push_back(mapping);
        for (auto& [label, members] : groups) {
            if (members.size() < 2) continue;
            std::sort(members.begin(), members.end(), mapping_order_less);
            Violation v;
            v.rule = RuleId::MultipleCorrespondence;
            v.involved = members;
            v.explanation = std::string(by_left ? "left" : "right") + " concept '" + label + "' takes part in " +
                            std::to_string(members.size()) + " mappings";
            out.push_back(std::move(v));
        }
    };
    collect(true);
    collect(false);
    return out;
}

namespace {

// Strongly connected components of the merged inheritance digraph, computed
// with Kosaraju's two-pass sweep. Nodes: one per mapping (the unified pair),
// one per unmapped concept of either side.
struct MergedGraph {
    std::size_t node_count = 0;
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::vector<std::size_t>> pred;
    std::vector<bool> has_self_loop;

    void add_edge(std::size_t from, std::size_t to) {
        if (from == to) {
            has_self_loop[from] = true;
            return;
        }
        succ[from].push_back(to);
        pred[to].push_back(from);
    }
};

MergedGraph build_merged_inheritance(const MappingSet& m, const Ontology& o1, const Ontology& o2) {
    std::map<std::string, std::size_t> left_node;
    std::map<std::string, std::size_t> right_node;
    std::size_t next = 0;
    for (const Mapping& mapping : m.mappings) {
        left_node[mapping.left] = next;
        right_node[mapping.right] = next;
        ++next;
    }
    for (const Concept& c : o1.concepts)
        if (!left_node.contains(c.label)) left_node[c.label] = next++;
    for (const Concept& c : o2.concepts)
        if (!right_node.contains(c.label)) right_node[c.label] = next++;

    MergedGraph g;
    g.node_count = next;
    g.succ.resize(next);
    g.pred.resize(next);
    g.has_self_loop.assign(next, false);
    for (const ConceptRelationship& edge : o1.relationships)
        if (edge.type == RelationType::Inheritance) g.add_edge(left_node.at(edge.source), left_node.at(edge.target));
    for (const ConceptRelationship& edge : o2.relationships)
        if (edge.type == RelationType::Inheritance) g.add_edge(right_node.at(edge.source), right_node.at(edge.target));
    return g;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const MergedGraph& g) {
    std::vector<std::size_t> finish_order;
    finish_order.reserve(g.node_count);
    std::vector<bool> visited(g.node_count, false);
    for (std::size_t root = 0; root < g.node_count; ++root) {
        if (visited[root]) continue;
        // Iterative DFS recording post-order.
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        visited[root] = true;
        while (!stack.empty()) {
            auto& [node, idx] = stack.back();
            if (idx < g.succ[node].size()) {
                const std::size_t next = g.succ[node][idx++];
                if (!visited[next]) {
                    visited[next] = true;
                    stack.emplace_back(next, 0);
                }
            } else {
                finish_order.push_back(node);
                stack.pop_back();
            }
        }
    }

    std::vector<std::vector<std::size_t>> components;
    std::vector<bool> assigned(g.node_count, false);
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (assigned[*it]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{*it};
        assigned[*it] = true;
        while (!stack.empty()) {
            const std::size_t node = stack.back();
            stack.pop_back();
            component.push_back(node);
            for (const std::size_t prev : g.pred[node]) {
                if (!assigned[prev]) {
                    assigned[prev] = true;
                    stack.push_back(prev);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace

std::vector<Violation> detect_merged_cycles(const MappingSet& m, const Ontology& o1, const Ontology& o2) {
    const MergedGraph g = build_merged_inheritance(m, o1, o2);
    std::vector<Violation> out;
    for (const std::vector<std::size_t>& component : strongly_connected_components(g)) {
        if (component.size() < 2 && !(component.size() == 1 && g.has_self_loop[component.front()])) continue;
        std::vector<Mapping> involved;
        for (const std::size_t node : component)
            if (node < m.mappings.size()) involved.push_back(m.mappings[node]);
        if (involved.empty()) continue;  // cycle lives entirely inside one input
        std::sort(involved.begin(), involved.end(), mapping_order_less);
        Violation v;
        v.rule = RuleId::Cycle;
        std::string pairs;
        for (const Mapping& mapping : involved) {
            if (!pairs.empty()) pairs += ", ";
            pairs += mapping_repr(mapping);
        }
        v.explanation = "the merged inheritance hierarchy contains a cycle through the unified pairs " + pairs;
        v.involved = std::move(involved);
        out.push_back(std::move(v));
    }
    sort_violations(out);
    return out;
}

namespace {

const Mapping& pick_drop(const std::vector<Mapping>& involved) {
    const Mapping* pick = &involved.front();
    for (const Mapping& candidate : involved) {
        if (candidate.score < pick->score) {
            pick = &candidate;
        } else if (candidate.score == pick->score) {
            if (candidate.left > pick->left || (candidate.left == pick->left && candidate.right > pick->right))
                pick = &candidate;
        }
    }
    return *pick;
}

std::vector<Violation> detect_for(RuleId id, const MappingSet& m, const Ontology& o1, const Ontology& o2) {
    switch (id) {
        case RuleId::Cycle: {
            std::vector<Violation> found = detect_cycles(m, o1, o2);
            if (found.empty()) found = detect_merged_cycles(m, o1, o2);
            return found;
        }
        case RuleId::RedundantSubsumption: return detect_redundant_subsumption(m, o1, o2);
        case RuleId::MultipleCorrespondence: return detect_multiple_correspondence(m);
    }
    throw std::logic_error("unreachable rule id");
}

std::multiset<std::string> involved_key(const Violation& v) {
    std::multiset<std::string> key;
    for (const Mapping& mapping : v.involved) key.insert(mapping.left + "\x1f" + mapping.right);
    return key;
}

}  // namespace

ValidatedMappings validate(const MappingSet& m, const Ontology& o1, const Ontology& o2,
                           const std::vector<ValidationRule>& rules) {
    std::set<RuleId> seen_ids;
    for (const ValidationRule& rule : rules)
        if (!seen_ids.insert(rule.id).second)
            throw std::invalid_argument("validate: rule '" + to_string(rule.id) + "' listed twice");

    std::vector<ValidationRule> ordered = rules;
    std::sort(ordered.begin(), ordered.end(),
              [](const ValidationRule& a, const ValidationRule& b) { return a.id < b.id; });

    ValidatedMappings result;
    result.accepted = m;
    auto& accepted = result.accepted.mappings;

    for (bool changed = true; changed;) {
        changed = false;
        for (const ValidationRule& rule : ordered) {
            if (rule.severity != Severity::Reject) continue;
            std::vector<Violation> found = detect_for(rule.id, result.accepted, o1, o2);
            if (found.empty()) continue;
            Violation v = std::move(found.front());
            const Mapping dropped = pick_drop(v.involved);
            v.dropped = dropped;
            result.violations.push_back(std::move(v));
            accepted.erase(std::find(accepted.begin(), accepted.end(), dropped));
            changed = true;
            break;
        }
    }

    for (const ValidationRule& rule : ordered) {
        if (rule.severity != Severity::Warn) continue;
        if (rule.id == RuleId::Cycle) {
            // Report pairwise findings, then whole-cycle findings that do not
            // repeat an already reported pair.
            std::vector<Violation> pairwise = detect_cycles(result.accepted, o1, o2);
            std::vector<Violation> merged = detect_merged_cycles(result.accepted, o1, o2);
            std::set<std::multiset<std::string>> reported;
            for (Violation& v : pairwise) {
                reported.insert(involved_key(v));
                result.violations.push_back(std::move(v));
            }
            for (Violation& v : merged)
                if (!reported.contains(involved_key(v))) result.violations.push_back(std::move(v));
            continue;
        }
        for (Violation& v : detect_for(rule.id, result.accepted, o1, o2)) result.violations.push_back(std::move(v));
    }
    return result;
}

}  // namespace ucdmerge
