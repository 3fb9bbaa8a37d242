#pragma once

#include <string>
#include <vector>

#include "ucdmerge/lexicon.hpp"
#include "ucdmerge/ontology.hpp"
#include "ucdmerge/similarity.hpp"

namespace ucdmerge {

enum class MappingRelation { Equivalence, IsA };

std::string to_string(MappingRelation relation);

// A scored correspondence between one concept of the left ontology and one
// concept of the right ontology, identified by label.
struct Mapping {
    std::string left;
    std::string right;
    double score = 0.0;
    MappingRelation relation = MappingRelation::Equivalence;

    bool operator==(const Mapping&) const = default;
};

// Deterministic processing order: higher score first, ties broken by the
// left label and then the right label (bytewise ascending).
bool mapping_order_less(const Mapping& a, const Mapping& b);

struct MappingSet {
    std::string left_ontology_id;
    std::string right_ontology_id;
    std::vector<Mapping> mappings;

    bool contains(const std::string& left, const std::string& right) const;
    // True when no concept appears in more than one mapping on its side.
    bool is_injective() const;
};

// Scores every concept pair and keeps the ones above the threshold, sorted
// by mapping_order_less. No injectivity filtering happens here.
std::vector<Mapping> score_candidates(const Ontology& left, const Ontology& right, const SimilarityConfig& config,
                                      const Lexicon& lexicon);

// Greedy selection over the sorted candidates: a candidate is kept when
// neither of its endpoints is already used by a kept mapping.
MappingSet match_ontologies(const Ontology& left, const Ontology& right, const SimilarityConfig& config,
                            const Lexicon& lexicon);

}  // namespace ucdmerge
