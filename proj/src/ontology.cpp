#include "ucdmerge/ontology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ucdmerge {

std::string_view to_string(RelationType type) {
    switch (type) {
        case RelationType::Inheritance: return "inheritance";
        case RelationType::Aggregation: return "aggregation";
        case RelationType::Composition: return "composition";
        case RelationType::Association: return "association";
    }
    return "association";
}

RelationType to_relation_type(RelationKind kind) {
    switch (kind) {
        case RelationKind::Inheritance: return RelationType::Inheritance;
        case RelationKind::Aggregation: return RelationType::Aggregation;
        case RelationKind::Composition: return RelationType::Composition;
        case RelationKind::Association: return RelationType::Association;
    }
    return RelationType::Association;
}

RelationKind to_relation_kind(RelationType type) {
    switch (type) {
        case RelationType::Inheritance: return RelationKind::Inheritance;
        case RelationType::Aggregation: return RelationKind::Aggregation;
        case RelationType::Composition: return RelationKind::Composition;
        case RelationType::Association: return RelationKind::Association;
    }
    return RelationKind::Association;
}

const Concept* Ontology::find_concept(std::string_view label) const {
    for (const Concept& c : concepts) {
        if (c.label == label) return &c;
    }
    return nullptr;
}

bool Ontology::has_edge(std::string_view source, std::string_view target, RelationType type) const {
    for (const ConceptRelationship& r : relationships) {
        if (r.type == type && r.source == source && r.target == target) return true;
    }
    return false;
}

bool Ontology::adjacent(std::string_view a, std::string_view b) const {
    for (const ConceptRelationship& r : relationships) {
        if ((r.source == a && r.target == b) || (r.source == b && r.target == a)) return true;
    }
    return false;
}

std::vector<ConceptRelationship> Ontology::edges_between(std::string_view a, std::string_view b) const {
    std::vector<ConceptRelationship> out;
    for (const ConceptRelationship& r : relationships) {
        if ((r.source == a && r.target == b) || (r.source == b && r.target == a)) out.push_back(r);
    }
    return out;
}

Ontology transform_diagram(const ClassDiagram& diagram) {
    Ontology o;
    o.id = diagram.name;
    o.types = {RelationType::Inheritance, RelationType::Aggregation, RelationType::Composition,
               RelationType::Association};
    o.concepts.reserve(diagram.classes.size());
    for (const UmlClass& cls : diagram.classes) o.concepts.push_back({cls.name, cls.attributes, cls.operations});
    o.relationships.reserve(diagram.relationships.size());
    for (const UmlRelationship& rel : diagram.relationships)
        o.relationships.push_back({rel.source, rel.target, to_relation_type(rel.kind)});
    return o;
}

std::vector<Ontology> transform_all(const std::vector<ClassDiagram>& diagrams) {
    std::set<std::string_view> names;
    for (const ClassDiagram& d : diagrams) {
        if (!names.insert(d.name).second)
            throw std::invalid_argument("duplicate diagram name \"" + d.name + "\"");
    }
    std::vector<Ontology> out;
    out.reserve(diagrams.size());
    for (const ClassDiagram& d : diagrams) out.push_back(transform_diagram(d));
    std::sort(out.begin(), out.end(), [](const Ontology& a, const Ontology& b) { return a.id < b.id; });
    return out;
}

}  // namespace ucdmerge
