#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ucdmerge/matcher.hpp"
#include "ucdmerge/ontology.hpp"

namespace ucdmerge {

// Typed mode keys adjacency on relation type and orientation (two ontologies
// walk in lockstep only along edges of the same kind pointing the same way).
// Plain mode treats both graphs as simple undirected graphs: any edge joining
// the two concepts counts.
enum class GraphMode { Typed, Plain };

std::string to_string(GraphMode mode);

// A walk in one ontology: consecutive concepts joined by an edge in either
// orientation. Edges records the realizing edge for each consecutive pair,
// as oriented in the ontology.
struct Segment {
    std::vector<std::string> concepts;
    std::vector<ConceptRelationship> edges;
};

// True iff every consecutive pair of seq is adjacent in o (either
// orientation, any type). Singletons are segments. Throws
// std::invalid_argument on labels that are not concepts of o.
bool is_segment(const std::vector<std::string>& seq, const Ontology& o);

// A walk through the mapping set whose left and right projections are
// segments that traverse matching edges step by step.
struct MappingSegment {
    std::vector<Mapping> steps;
};

// True iff steps is non-empty, every step belongs to m, and each consecutive
// pair of steps is adjacent under mode.
bool is_mapping_segment(const MappingSegment& segment, const MappingSet& m, const Ontology& o1, const Ontology& o2,
                        GraphMode mode);

// True iff some edge joins the two left concepts in o1 and some edge joins
// the two right concepts in o2 compatibly: in Typed mode the edges must have
// the same type and the same orientation relative to (m1 -> m2); in Plain
// mode any joining edge works. A mapping is never adjacent to itself.
bool mappings_adjacent(const Mapping& m1, const Mapping& m2, const Ontology& o1, const Ontology& o2, GraphMode mode);

// True iff some mapping segment within m has ends m1 and m2 — equivalently,
// m1 and m2 are connected in the mapping-adjacency graph. Reflexive. Throws
// std::invalid_argument when m1 or m2 is not in m.
bool bonded_by_segment(const Mapping& m1, const Mapping& m2, const MappingSet& m, const Ontology& o1,
                       const Ontology& o2, GraphMode mode);

struct EquivalenceClass {
    std::vector<Mapping> members;  // non-empty, sorted by mapping_order_less

    const Mapping& representative() const { return members.front(); }
    bool operator==(const EquivalenceClass&) const = default;
};

// Layered expansion of one bonding class: layers[0] = {seed}, layers[n] =
// mappings one step from layers[n-1] not seen before. rank = layers.size(),
// the first layer index that came up empty.
struct EcfResult {
    EquivalenceClass cls;
    std::vector<std::vector<Mapping>> layers;
    std::size_t rank = 0;
};

// Throws std::invalid_argument when seed is not in m.
EcfResult ecf(const Mapping& seed, const MappingSet& m, const Ontology& o1, const Ontology& o2, GraphMode mode);

struct ClassPartition {
    std::vector<EquivalenceClass> classes;  // ordered by representative

    bool operator==(const ClassPartition&) const = default;
};

// Partitions m into bonding classes by running ecf from each not-yet-visited
// seed, seeds taken in mapping_order_less order.
ClassPartition equivalence_classes(const MappingSet& m, const Ontology& o1, const Ontology& o2, GraphMode mode);

// A pair of subgraphs, one per ontology, isomorphic under correspondence.
// Edges holds the matched edge pairs: the left subgraph's edge set is the
// first components, the right subgraph's the second.
struct SubgraphPair {
    std::vector<std::string> left_concepts;   // sorted
    std::vector<std::string> right_concepts;  // sorted
    std::vector<std::pair<ConceptRelationship, ConceptRelationship>> edges;      // sorted, unique
    std::vector<std::pair<std::string, std::string>> correspondence;             // sorted by left label

    auto operator<=>(const SubgraphPair&) const = default;
};

// One SubgraphPair per class: vertices are the class's left and right
// concepts, edges are exactly the matched edge pairs whose endpoints are
// mapped within the class (induced edges present on only one side are
// excluded — they would break the isomorphism).
std::vector<SubgraphPair> to_max_subgraphs(const ClassPartition& partition, const Ontology& o1, const Ontology& o2,
                                           GraphMode mode);

// Structural check of a SubgraphPair: correspondence is a bijection between
// the vertex lists, every recorded edge exists in its ontology with endpoints
// inside the vertex lists, and each edge pair matches under the
// correspondence per mode.
bool is_isomorphic_pair(const SubgraphPair& pair, const Ontology& o1, const Ontology& o2, GraphMode mode);

}  // namespace ucdmerge
