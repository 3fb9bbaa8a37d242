#include "ucdmerge/segments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ucdmerge {

std::string to_string(GraphMode mode) { return mode == GraphMode::Typed ? "typed" : "plain"; }

bool is_segment(const std::vector<std::string>& seq, const Ontology& o) {
    if (seq.empty()) return false;
    for (const std::string& label : seq)
        if (!o.has_concept(label)) throw std::invalid_argument("is_segment: unknown concept '" + label + "'");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!o.adjacent(seq[i], seq[i + 1])) return false;
    return true;
}

bool mappings_adjacent(const Mapping& m1, const Mapping& m2, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    if (m1 == m2) return false;
    if (mode == GraphMode::Plain) return o1.adjacent(m1.left, m2.left) && o2.adjacent(m1.right, m2.right);
    for (const ConceptRelationship& e1 : o1.edges_between(m1.left, m2.left)) {
        if (e1.source == m1.left && e1.target == m2.left) {
            if (o2.has_edge(m1.right, m2.right, e1.type)) return true;
        } else {
            if (o2.has_edge(m2.right, m1.right, e1.type)) return true;
        }
    }
    return false;
}

bool is_mapping_segment(const MappingSegment& segment, const MappingSet& m, const Ontology& o1, const Ontology& o2,
                        GraphMode mode) {
    if (segment.steps.empty()) return false;
    for (const Mapping& step : segment.steps)
        if (!m.contains(step.left, step.right)) return false;
    for (std::size_t i = 0; i + 1 < segment.steps.size(); ++i)
        if (!mappings_adjacent(segment.steps[i], segment.steps[i + 1], o1, o2, mode)) return false;
    return true;
}

namespace {

std::size_t find_mapping(const std::vector<Mapping>& all, const Mapping& wanted, const char* who) {
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].left == wanted.left && all[i].right == wanted.right) return i;
    throw std::invalid_argument(std::string(who) + ": mapping (" + wanted.left + ", " + wanted.right +
                                ") is not in the mapping set");
}

// Breadth-first layers of the mapping-adjacency graph starting from seed.
std::vector<std::vector<std::size_t>> bfs_layers(const std::vector<Mapping>& all, std::size_t seed,
                                                 const Ontology& o1, const Ontology& o2, GraphMode mode) {
    std::vector<std::vector<std::size_t>> layers;
    std::vector<bool> visited(all.size(), false);
    std::vector<std::size_t> current{seed};
    visited[seed] = true;
    while (!current.empty()) {
        layers.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (visited[j]) continue;
            const bool reached = std::any_of(current.begin(), current.end(), [&](std::size_t i) {
                return mappings_adjacent(all[i], all[j], o1, o2, mode);
            });
            if (reached) {
                visited[j] = true;
                next.push_back(j);
            }
        }
        current = std::move(next);
    }
    return layers;
}

}  // namespace

bool bonded_by_segment(const Mapping& m1, const Mapping& m2, const MappingSet& m, const Ontology& o1,
                       const Ontology& o2, GraphMode mode) {
    const std::size_t i = find_mapping(m.mappings, m1, "bonded_by_segment");
    const std::size_t j = find_mapping(m.mappings, m2, "bonded_by_segment");
    if (i == j) return true;
    for (const std::vector<std::size_t>& layer : bfs_layers(m.mappings, i, o1, o2, mode))
        if (std::find(layer.begin(), layer.end(), j) != layer.end()) return true;
    return false;
}

EcfResult ecf(const Mapping& seed, const MappingSet& m, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    const std::size_t start = find_mapping(m.mappings, seed, "ecf");
    EcfResult result;
    for (const std::vector<std::size_t>& layer : bfs_layers(m.mappings, start, o1, o2, mode)) {
        std::vector<Mapping> mapped;
        mapped.reserve(layer.size());
        for (const std::size_t i : layer) mapped.push_back(m.mappings[i]);
        std::sort(mapped.begin(), mapped.end(), mapping_order_less);
        result.cls.members.insert(result.cls.members.end(), mapped.begin(), mapped.end());
        result.layers.push_back(std::move(mapped));
    }
    result.rank = result.layers.size();
    std::sort(result.cls.members.begin(), result.cls.members.end(), mapping_order_less);
    return result;
}

ClassPartition equivalence_classes(const MappingSet& m, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    std::vector<std::size_t> order(m.mappings.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return mapping_order_less(m.mappings[a], m.mappings[b]); });

    ClassPartition partition;
    std::vector<bool> visited(m.mappings.size(), false);
    for (const std::size_t seed : order) {
        if (visited[seed]) continue;
        EquivalenceClass cls;
        for (const std::vector<std::size_t>& layer : bfs_layers(m.mappings, seed, o1, o2, mode)) {
            for (const std::size_t i : layer) {
                visited[i] = true;
                cls.members.push_back(m.mappings[i]);
            }
        }
        std::sort(cls.members.begin(), cls.members.end(), mapping_order_less);
        partition.classes.push_back(std::move(cls));
    }
    return partition;
}

namespace {

using EdgePair = std::pair<ConceptRelationship, ConceptRelationship>;

void match_edges_typed(const Mapping& u, const Mapping& v, const Ontology& o1, const Ontology& o2,
                       std::vector<EdgePair>& out) {
    for (const ConceptRelationship& e1 : o1.edges_between(u.left, v.left)) {
        const ConceptRelationship e2 = e1.source == u.left
                                           ? ConceptRelationship{u.right, v.right, e1.type}
                                           : ConceptRelationship{v.right, u.right, e1.type};
        if (o2.has_edge(e2.source, e2.target, e2.type)) out.emplace_back(e1, e2);
    }
}

void match_edges_plain(const Mapping& u, const Mapping& v, const Ontology& o1, const Ontology& o2,
                       std::vector<EdgePair>& out) {
    const std::vector<ConceptRelationship> lefts = o1.edges_between(u.left, v.left);
    const std::vector<ConceptRelationship> rights = o2.edges_between(u.right, v.right);
    if (lefts.empty() || rights.empty()) return;
    out.emplace_back(*std::min_element(lefts.begin(), lefts.end()), *std::min_element(rights.begin(), rights.end()));
}

}  // namespace

std::vector<SubgraphPair> to_max_subgraphs(const ClassPartition& partition, const Ontology& o1, const Ontology& o2,
                                           GraphMode mode) {
    std::vector<SubgraphPair> out;
    out.reserve(partition.classes.size());
    for (const EquivalenceClass& cls : partition.classes) {
        SubgraphPair pair;
        for (const Mapping& member : cls.members) {
            pair.left_concepts.push_back(member.left);
            pair.right_concepts.push_back(member.right);
            pair.correspondence.emplace_back(member.left, member.right);
        }
        std::sort(pair.left_concepts.begin(), pair.left_concepts.end());
        std::sort(pair.right_concepts.begin(), pair.right_concepts.end());
        std::sort(pair.correspondence.begin(), pair.correspondence.end());

        for (std::size_t i = 0; i < cls.members.size(); ++i) {
            for (std::size_t j = i; j < cls.members.size(); ++j) {
                // j == i picks up matched self-loops.
                if (mode == GraphMode::Typed)
                    match_edges_typed(cls.members[i], cls.members[j], o1, o2, pair.edges);
                else
                    match_edges_plain(cls.members[i], cls.members[j], o1, o2, pair.edges);
            }
        }
        std::sort(pair.edges.begin(), pair.edges.end());
        pair.edges.erase(std::unique(pair.edges.begin(), pair.edges.end()), pair.edges.end());
        out.push_back(std::move(pair));
    }
    return out;
}

bool is_isomorphic_pair(const SubgraphPair& pair, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    if (pair.correspondence.size() != pair.left_concepts.size() ||
        pair.correspondence.size() != pair.right_concepts.size())
        return false;
    std::map<std::string, std::string> forward;
    std::set<std::string> lefts;
    std::set<std::string> rights;
    for (const auto& [left, right] : pair.correspondence) {
        if (!o1.has_concept(left) || !o2.has_concept(right)) return false;
        if (!forward.emplace(left, right).second) return false;
        lefts.insert(left);
        if (!rights.insert(right).second) return false;
    }
    for (const std::string& label : pair.left_concepts)
        if (!lefts.contains(label)) return false;
    for (const std::string& label : pair.right_concepts)
        if (!rights.contains(label)) return false;

    const auto edge_exists = [](const Ontology& o, const ConceptRelationship& edge) {
        return std::find(o.relationships.begin(), o.relationships.end(), edge) != o.relationships.end();
    };
    for (const auto& [e1, e2] : pair.edges) {
        if (!edge_exists(o1, e1) || !edge_exists(o2, e2)) return false;
        if (!lefts.contains(e1.source) || !lefts.contains(e1.target)) return false;
        if (!rights.contains(e2.source) || !rights.contains(e2.target)) return false;
        if (mode == GraphMode::Typed) {
            if (e1.type != e2.type) return false;
            if (forward.at(e1.source) != e2.source || forward.at(e1.target) != e2.target) return false;
        } else {
            const std::string& a = forward.at(e1.source);
            const std::string& b = forward.at(e1.target);
            const bool same = a == e2.source && b == e2.target;
            const bool swapped = a == e2.target && b == e2.source;
            if (!same && !swapped) return false;
        }
    }
    return true;
}

}  // namespace ucdmerge
