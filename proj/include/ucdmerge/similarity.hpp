#pragma once

#include <string_view>

#include "ucdmerge/lexicon.hpp"
#include "ucdmerge/ontology.hpp"

namespace ucdmerge {

enum class Combiner { Max, WeightedAverage };

struct MeasureWeights {
    double edit = 1.0;
    double trigram = 1.0;
    double synonym = 1.0;

    bool operator==(const MeasureWeights&) const = default;
};

struct SimilarityConfig {
    double threshold = 0.8;  // candidate pairs must score strictly above this
    MeasureWeights weights;  // a zero weight disables the measure
    Combiner combiner = Combiner::Max;

    // Throws std::invalid_argument unless 0 < threshold <= 1, every weight
    // lies in [0,1], and at least one weight is positive.
    void check() const;
};

// All kernels are symmetric, bounded in [0,1], case-folded, and score 1.0
// on identical non-empty inputs. Lengths and positions are in code points.

// 1 - editDistance(a,b) / max(|a|,|b|); 1.0 when both strings are empty.
double levenshtein_sim(std::string_view a, std::string_view b);

// Dice coefficient over padded character trigram sets; 1.0 when both sets
// are empty (both strings empty). Strings are padded with two sentinel
// positions on each side before trigram extraction.
double trigram_sim(std::string_view a, std::string_view b);

// 1.0 iff the labels are equal after folding or synonymous per the lexicon.
double synonym_sim(std::string_view a, std::string_view b, const Lexicon& lexicon);

// Combines the enabled kernels on the concept labels. Max takes the best
// enabled score; WeightedAverage computes sum(w_i * s_i) / sum(w_i).
double combined_sim(const Concept& a, const Concept& b, const SimilarityConfig& config, const Lexicon& lexicon);

}  // namespace ucdmerge
