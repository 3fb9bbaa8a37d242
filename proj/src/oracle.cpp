#include "ucdmerge/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ucdmerge {

namespace {

// Deliberately re-derived from the raw relationship lists rather than the
// segment engine's helpers.

bool joins(const ConceptRelationship& e, const std::string& a, const std::string& b) {
    return (e.source == a && e.target == b) || (e.source == b && e.target == a);
}

bool oracle_adjacent(const Mapping& u, const Mapping& v, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    if (u == v) return false;
    if (mode == GraphMode::Plain) {
        bool left = false;
        for (const ConceptRelationship& e : o1.relationships) left = left || joins(e, u.left, v.left);
        if (!left) return false;
        for (const ConceptRelationship& e : o2.relationships)
            if (joins(e, u.right, v.right)) return true;
        return false;
    }
    for (const ConceptRelationship& e1 : o1.relationships) {
        if (!joins(e1, u.left, v.left)) continue;
        const std::string& from = e1.source == u.left ? u.right : v.right;
        const std::string& to = e1.source == u.left ? v.right : u.right;
        for (const ConceptRelationship& e2 : o2.relationships)
            if (e2.source == from && e2.target == to && e2.type == e1.type) return true;
    }
    return false;
}

bool subset_connected(const std::vector<Mapping>& subset, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    if (subset.size() <= 1) return true;
    std::vector<bool> reached(subset.size(), false);
    std::vector<std::size_t> worklist{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!worklist.empty()) {
        const std::size_t i = worklist.back();
        worklist.pop_back();
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (reached[j] || !oracle_adjacent(subset[i], subset[j], o1, o2, mode)) continue;
            reached[j] = true;
            ++count;
            worklist.push_back(j);
        }
    }
    return count == subset.size();
}

SubgraphPair build_pair(const std::vector<Mapping>& subset, const Ontology& o1, const Ontology& o2, GraphMode mode) {
    SubgraphPair pair;
    std::map<std::string, std::string> forward;
    for (const Mapping& m : subset) {
        pair.left_concepts.push_back(m.left);
        pair.right_concepts.push_back(m.right);
        pair.correspondence.emplace_back(m.left, m.right);
        forward[m.left] = m.right;
    }
    std::sort(pair.left_concepts.begin(), pair.left_concepts.end());
    std::sort(pair.right_concepts.begin(), pair.right_concepts.end());
    std::sort(pair.correspondence.begin(), pair.correspondence.end());

    if (mode == GraphMode::Typed) {
        for (const ConceptRelationship& e1 : o1.relationships) {
            const auto src = forward.find(e1.source);
            const auto dst = forward.find(e1.target);
            if (src == forward.end() || dst == forward.end()) continue;
            const ConceptRelationship e2{src->second, dst->second, e1.type};
            if (std::find(o2.relationships.begin(), o2.relationships.end(), e2) != o2.relationships.end())
                pair.edges.emplace_back(e1, e2);
        }
    } else {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            for (std::size_t j = i; j < subset.size(); ++j) {
                const ConceptRelationship* best_left = nullptr;
                for (const ConceptRelationship& e : o1.relationships)
                    if (joins(e, subset[i].left, subset[j].left) && (!best_left || e < *best_left)) best_left = &e;
                if (!best_left) continue;
                const ConceptRelationship* best_right = nullptr;
                for (const ConceptRelationship& e : o2.relationships)
                    if (joins(e, subset[i].right, subset[j].right) && (!best_right || e < *best_right)) best_right = &e;
                if (best_right) pair.edges.emplace_back(*best_left, *best_right);
            }
        }
    }
    std::sort(pair.edges.begin(), pair.edges.end());
    pair.edges.erase(std::unique(pair.edges.begin(), pair.edges.end()), pair.edges.end());
    return pair;
}

}  // namespace

bool pair_included(const SubgraphPair& inner, const SubgraphPair& outer) {
    const auto contains_all = [](const auto& small, const auto& big) {
        return std::all_of(small.begin(), small.end(), [&](const auto& item) {
            return std::find(big.begin(), big.end(), item) != big.end();
        });
    };
    return contains_all(inner.left_concepts, outer.left_concepts) &&
           contains_all(inner.right_concepts, outer.right_concepts) &&
           contains_all(inner.correspondence, outer.correspondence) && contains_all(inner.edges, outer.edges);
}

IsoPairSet enumerate_iso_pairs(const Ontology& o1, const Ontology& o2, const MappingSet& m, GraphMode mode,
                               std::size_t cap) {
    const std::size_t n = m.mappings.size();
    if (n > cap)
        throw CapExceededError("oracle: " + std::to_string(n) + " mappings exceed the enumeration cap of " +
                               std::to_string(cap));
    IsoPairSet result;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Mapping> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) subset.push_back(m.mappings[i]);
        if (!subset_connected(subset, o1, o2, mode)) continue;
        result.pairs.push_back(build_pair(subset, o1, o2, mode));
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    result.pairs.erase(std::unique(result.pairs.begin(), result.pairs.end()), result.pairs.end());
    return result;
}

std::vector<SubgraphPair> maximal_elements(const IsoPairSet& s) {
    std::vector<SubgraphPair> out;
    for (const SubgraphPair& candidate : s.pairs) {
        const bool dominated = std::any_of(s.pairs.begin(), s.pairs.end(), [&](const SubgraphPair& other) {
            return !(other == candidate) && pair_included(candidate, other);
        });
        if (!dominated) out.push_back(candidate);
    }
    return out;
}

}  // namespace ucdmerge
