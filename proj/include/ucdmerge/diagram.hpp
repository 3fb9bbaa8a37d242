#pragma once

#include <compare>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ucdmerge {

enum class RelationKind { Inheritance, Aggregation, Composition, Association };

std::string_view to_string(RelationKind kind);

struct UmlAttribute {
    std::string name;
    std::string type_name;

    auto operator<=>(const UmlAttribute&) const = default;
};

struct UmlClass {
    std::string name;
    std::vector<UmlAttribute> attributes;  // names unique within the class
    std::vector<std::string> operations;

    bool operator==(const UmlClass&) const = default;
};

struct UmlRelationship {
    std::string source;  // child for Inheritance, whole for Composition/Aggregation
    std::string target;
    RelationKind kind = RelationKind::Association;

    auto operator<=>(const UmlRelationship&) const = default;
};

/// A parsed UML class diagram. Class names are unique and case-sensitive,
/// every relationship endpoint names a declared class, and there is no
/// duplicate (source, target, kind) triple and no self-inheritance.
struct ClassDiagram {
    std::string name;
    std::vector<UmlClass> classes;               // parse order preserved
    std::vector<UmlRelationship> relationships;  // parse order preserved

    bool operator==(const ClassDiagram&) const = default;

    const UmlClass* find_class(std::string_view class_name) const;
    bool has_class(std::string_view class_name) const { return find_class(class_name) != nullptr; }
};

/// Raised for any malformed `.ucd` input: syntax errors carry the offending
/// line and column, semantic errors (duplicate class, dangling endpoint,
/// self-inheritance) carry the line of the offending directive.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Parses a `.ucd` document. Total over arbitrary bytes: either returns a
// diagram satisfying all invariants or throws ParseError.
//
// Format (UTF-8, line oriented, `#` starts a comment outside quotes):
//   diagram "<name>"                    exactly one, first directive
//   class "<name>"                      optionally followed by indented lines
//     attr "<name>" : "<type>"
//     op "<name>"
//   inherit "<child>" "<parent>"
//   compose "<whole>" "<part>"
//   aggregate "<whole>" "<part>"
//   assoc "<a>" "<b>"
// Quotes are mandatory; `\"` escapes a quote and `\\` a backslash.
ClassDiagram parse_diagram(std::string_view text);

ClassDiagram parse_diagram_file(const std::filesystem::path& path);

// Emits the canonical text form: classes sorted by name, relationships
// sorted by (source, target, kind). serialize_diagram(parse_diagram(x))
// re-parses to normalized(parse_diagram(x)) for every valid x.
std::string serialize_diagram(const ClassDiagram& diagram);

// The diagram with classes and relationships in canonical sorted order.
ClassDiagram normalized(ClassDiagram diagram);

// Throws std::invalid_argument if any ClassDiagram invariant is broken.
// parse_diagram output always passes; programmatically built values can use
// this before serialization.
void check_diagram(const ClassDiagram& diagram);

}  // namespace ucdmerge
