#include <algorithm>
#include <stdexcept>

#include <doctest.h>

#include "test_support.hpp"
#include "ucdmerge/diagram.hpp"
#include "ucdmerge/ontology.hpp"

using namespace ucdmerge;

TEST_CASE("transform_diagram maps the hardware fixture structurally") {
    const ClassDiagram d = parse_diagram_file(test::fixture_path("g1.ucd"));
    const Ontology o = transform_diagram(d);

    CHECK(o.id == "G1");
    CHECK(o.concepts.size() == 11);
    CHECK(o.relationships.size() == 10);
    REQUIRE(o.types.size() == 4);
    CHECK(std::count(o.types.begin(), o.types.end(), RelationType::Inheritance) == 1);
    CHECK(std::count(o.types.begin(), o.types.end(), RelationType::Aggregation) == 1);
    CHECK(std::count(o.types.begin(), o.types.end(), RelationType::Composition) == 1);
    CHECK(std::count(o.types.begin(), o.types.end(), RelationType::Association) == 1);

    // One concept per class, same labels, same order.
    REQUIRE(o.concepts.size() == d.classes.size());
    for (std::size_t i = 0; i < d.classes.size(); ++i) CHECK(o.concepts[i].label == d.classes[i].name);

    // Attributes and operations are carried over verbatim.
    const Concept* monitor = o.find_concept("Monitor");
    REQUIRE(monitor != nullptr);
    REQUIRE(monitor->attributes.size() == 1);
    CHECK(monitor->attributes[0].name == "size");
    CHECK(monitor->attributes[0].type_name == "int");
    const Concept* unit = o.find_concept("System unit");
    REQUIRE(unit != nullptr);
    REQUIRE(unit->properties.size() == 1);
    CHECK(unit->properties[0] == "boot");

    // One relationship per UML relationship, orientation and type preserved.
    CHECK(o.has_edge("Desktop PC", "Monitor", RelationType::Composition));
    CHECK(o.has_edge("System unit", "Storage", RelationType::Aggregation));
    CHECK(o.has_edge("RAM", "Memory", RelationType::Inheritance));
    CHECK(o.has_edge("Hard disk", "Storage", RelationType::Inheritance));
    CHECK_FALSE(o.has_edge("Memory", "RAM", RelationType::Inheritance));
    CHECK_FALSE(o.has_edge("RAM", "Memory", RelationType::Composition));
}

TEST_CASE("types vector is the full enumeration even for an empty diagram") {
    const Ontology o = transform_diagram(parse_diagram("diagram \"empty\"\n"));
    CHECK(o.concepts.empty());
    CHECK(o.relationships.empty());
    CHECK(o.types.size() == 4);
}

TEST_CASE("adjacency helpers ignore orientation and type") {
    const Ontology o = test::make_ontology("O", {"A", "B", "C"},
                                           {{"A", "B", RelationType::Composition},
                                            {"B", "A", RelationType::Association}});

    CHECK(o.adjacent("A", "B"));
    CHECK(o.adjacent("B", "A"));
    CHECK_FALSE(o.adjacent("A", "C"));
    CHECK_FALSE(o.adjacent("A", "A"));

    const std::vector<ConceptRelationship> between = o.edges_between("B", "A");
    REQUIRE(between.size() == 2);
    CHECK(o.edges_between("A", "C").empty());

    CHECK(o.has_edge("A", "B", RelationType::Composition));
    CHECK_FALSE(o.has_edge("B", "A", RelationType::Composition));  // orientation matters here
    CHECK(o.has_edge("B", "A", RelationType::Association));
}

TEST_CASE("find_concept distinguishes labels exactly") {
    const Ontology o = test::make_ontology("O", {"Disk", "disk"}, {});
    REQUIRE(o.find_concept("Disk") != nullptr);
    REQUIRE(o.find_concept("disk") != nullptr);
    CHECK(o.find_concept("Disk") != o.find_concept("disk"));
    CHECK(o.find_concept("DISK") == nullptr);
    CHECK(o.has_concept("disk"));
    CHECK_FALSE(o.has_concept("DISK"));
}

TEST_CASE("transform_all orders by diagram name and rejects duplicates") {
    const ClassDiagram a = parse_diagram("diagram \"zeta\"\nclass \"X\"\n");
    const ClassDiagram b = parse_diagram("diagram \"alpha\"\nclass \"Y\"\n");

    const std::vector<Ontology> out = transform_all({a, b});
    REQUIRE(out.size() == 2);
    CHECK(out[0].id == "alpha");
    CHECK(out[1].id == "zeta");

    CHECK_THROWS_AS(transform_all({a, a}), std::invalid_argument);
    CHECK(transform_all({}).empty());
}

TEST_CASE("transform of random diagrams preserves counts and membership") {
    std::mt19937 rng(20260825);
    for (int iter = 0; iter < 50; ++iter) {
        const ClassDiagram d = test::random_diagram(rng, "rand" + std::to_string(iter), iter % 7);
        const Ontology o = transform_diagram(d);
        REQUIRE(o.concepts.size() == d.classes.size());
        REQUIRE(o.relationships.size() == d.relationships.size());
        for (const UmlClass& cls : d.classes) CHECK(o.has_concept(cls.name));
        for (const UmlRelationship& rel : d.relationships)
            CHECK(o.has_edge(rel.source, rel.target, to_relation_type(rel.kind)));
    }
}
