#include "ucdmerge/matcher.hpp"

#include <algorithm>
#include <set>

namespace ucdmerge {

std::string to_string(MappingRelation relation) {
    return relation == MappingRelation::Equivalence ? "equivalence" : "is-a";
}

bool mapping_order_less(const Mapping& a, const Mapping& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
}

bool MappingSet::contains(const std::string& left, const std::string& right) const {
    return std::any_of(mappings.begin(), mappings.end(),
                       [&](const Mapping& m) { return m.left == left && m.right == right; });
}

bool MappingSet::is_injective() const {
    std::set<std::string> lefts;
    std::set<std::string> rights;
    for (const Mapping& m : mappings) {
        if (!lefts.insert(m.left).second) return false;
        if (!rights.insert(m.right).second) return false;
    }
    return true;
}

std::vector<Mapping> score_candidates(const Ontology& left, const Ontology& right, const SimilarityConfig& config,
                                      const Lexicon& lexicon) {
    config.check();
    std::vector<Mapping> candidates;
    for (const Concept& a : left.concepts) {
        for (const Concept& b : right.concepts) {
            const double score = combined_sim(a, b, config, lexicon);
            if (score > config.threshold)
                candidates.push_back(Mapping{a.label, b.label, score, MappingRelation::Equivalence});
        }
    }
    std::sort(candidates.begin(), candidates.end(), mapping_order_less);
    return candidates;
}

MappingSet match_ontologies(const Ontology& left, const Ontology& right, const SimilarityConfig& config,
                            const Lexicon& lexicon) {
    MappingSet result;
    result.left_ontology_id = left.id;
    result.right_ontology_id = right.id;
    std::set<std::string> used_left;
    std::set<std::string> used_right;
    for (const Mapping& candidate : score_candidates(left, right, config, lexicon)) {
        if (used_left.contains(candidate.left) || used_right.contains(candidate.right)) continue;
        used_left.insert(candidate.left);
        used_right.insert(candidate.right);
        result.mappings.push_back(candidate);
    }
    return result;
}

}  // namespace ucdmerge
