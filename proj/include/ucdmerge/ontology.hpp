#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ucdmerge/diagram.hpp"

namespace ucdmerge {

enum class RelationType { Inheritance, Aggregation, Composition, Association };

std::string_view to_string(RelationType type);
RelationType to_relation_type(RelationKind kind);
RelationKind to_relation_kind(RelationType type);

struct Concept {
    std::string label;
    std::vector<UmlAttribute> attributes;
    std::vector<std::string> properties;  // carried from UML operations

    bool operator==(const Concept&) const = default;
};

struct ConceptRelationship {
    std::string source;
    std::string target;
    RelationType type = RelationType::Association;

    auto operator<=>(const ConceptRelationship&) const = default;
};

/// A class diagram viewed as a typed directed graph: concepts, typed
/// relationships between them, and the (fixed) set of relationship types.
struct Ontology {
    std::string id;
    std::vector<Concept> concepts;                   // labels unique, deterministic order
    std::vector<ConceptRelationship> relationships;  // triples unique
    std::vector<RelationType> types;                 // always the full enumeration

    bool operator==(const Ontology&) const = default;

    const Concept* find_concept(std::string_view label) const;
    bool has_concept(std::string_view label) const { return find_concept(label) != nullptr; }

    bool has_edge(std::string_view source, std::string_view target, RelationType type) const;
    // True if any edge joins a and b, in either orientation, with any type.
    bool adjacent(std::string_view a, std::string_view b) const;
    // All edges joining a and b in either orientation.
    std::vector<ConceptRelationship> edges_between(std::string_view a, std::string_view b) const;
};

// Structural mapping: one concept per class, one relationship per UML
// relationship, orientation and type preserved.
Ontology transform_diagram(const ClassDiagram& diagram);

// Element-wise transform_diagram, results ordered by diagram name.
// Throws std::invalid_argument on duplicate diagram names.
std::vector<Ontology> transform_all(const std::vector<ClassDiagram>& diagrams);

}  // namespace ucdmerge
