#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ucdmerge/matcher.hpp"
#include "ucdmerge/ontology.hpp"
#include "ucdmerge/segments.hpp"

namespace ucdmerge {

// Reference implementation for desk-scale cross-checks: exhaustively
// enumerates subsets of the mapping set instead of walking adjacency. Shares
// nothing with the segment engine beyond the data types, so agreement between
// the two is meaningful evidence.

inline constexpr std::size_t kDefaultOracleCap = 16;

class CapExceededError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// All isomorphic subgraph pairs compatible with a mapping set, with the
// component-wise inclusion order implied by pair_included.
struct IsoPairSet {
    std::vector<SubgraphPair> pairs;  // sorted, unique

    bool operator==(const IsoPairSet&) const = default;
};

// True iff inner's vertices, correspondence, and matched edges are all
// contained in outer's on both sides.
bool pair_included(const SubgraphPair& inner, const SubgraphPair& outer);

// Evaluates every subset of m (including the empty one) and keeps those that
// are connected in the mapping-adjacency sense; each kept subset contributes
// its matched-edge subgraph pair. Throws CapExceededError when m holds more
// than cap mappings — the result must never be silently partial.
IsoPairSet enumerate_iso_pairs(const Ontology& o1, const Ontology& o2, const MappingSet& m, GraphMode mode,
                               std::size_t cap = kDefaultOracleCap);

// Pairs of s with no strict superset in s.
std::vector<SubgraphPair> maximal_elements(const IsoPairSet& s);

}  // namespace ucdmerge
