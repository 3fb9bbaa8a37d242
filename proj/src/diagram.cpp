#include "ucdmerge/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace ucdmerge {

std::string_view to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::Inheritance: return "inherit";
        case RelationKind::Aggregation: return "aggregate";
        case RelationKind::Composition: return "compose";
        case RelationKind::Association: return "assoc";
    }
    return "assoc";
}

const UmlClass* ClassDiagram::find_class(std::string_view class_name) const {
    for (const UmlClass& c : classes) {
        if (c.name == class_name) return &c;
    }
    return nullptr;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    enum class Type { Word, Quoted, Colon };
    Type type;
    std::string text;
    int column;  // 1-based byte offset
};

// Splits one line into tokens. `#` outside quotes drops the rest of the line.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == '#') break;
        const int col = static_cast<int>(i) + 1;
        if (c == '"') {
            std::string value;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                const char q = line[i];
                if (q == '\\') {
                    if (i + 1 >= line.size()) throw ParseError(line_no, static_cast<int>(i) + 1, "dangling escape");
                    const char next = line[i + 1];
                    if (next != '"' && next != '\\')
                        throw ParseError(line_no, static_cast<int>(i) + 1, "unknown escape sequence");
                    value.push_back(next);
                    i += 2;
                } else if (q == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    value.push_back(q);
                    ++i;
                }
            }
            if (!closed) throw ParseError(line_no, col, "unterminated quoted string");
            tokens.push_back({Token::Type::Quoted, value, col});
        } else if (c == ':') {
            tokens.push_back({Token::Type::Colon, ":", col});
            ++i;
        } else {
            std::string word;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '"' && line[i] != ':' &&
                   line[i] != '#') {
                word.push_back(line[i]);
                ++i;
            }
            tokens.push_back({Token::Type::Word, word, col});
        }
    }
    return tokens;
}

std::string escape_label(std::string_view label) {
    std::string out;
    out.reserve(label.size() + 2);
    for (const char c : label) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ClassDiagram run() {
        // A UTF-8 BOM is tolerated before the first directive.
        if (text_.substr(0, 3) == "\xEF\xBB\xBF") text_.remove_prefix(3);

        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text_.size()) {
            const std::size_t eol = text_.find('\n', pos);
            std::string_view line =
                eol == std::string_view::npos ? text_.substr(pos) : text_.substr(pos, eol - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            ++line_no;
            parse_line(line, line_no);
            if (eol == std::string_view::npos) break;
            pos = eol + 1;
        }

        if (!saw_header_) throw ParseError(1, 1, "missing diagram header");
        check_endpoints();
        return std::move(diagram_);
    }

private:
    void parse_line(std::string_view line, int line_no) {
        const std::vector<Token> tokens = tokenize_line(line, line_no);
        if (tokens.empty()) return;

        const Token& head = tokens.front();
        if (head.type != Token::Type::Word)
            throw ParseError(line_no, head.column, "expected a directive name");

        if (head.text == "diagram") {
            if (saw_header_) throw ParseError(line_no, head.column, "duplicate diagram directive");
            diagram_.name = expect_strings(tokens, 1, line_no);
            saw_header_ = true;
            return;
        }
        if (!saw_header_)
            throw ParseError(line_no, head.column, "expected `diagram \"<name>\"` as the first directive");

        if (head.text == "class") {
            UmlClass cls;
            cls.name = expect_strings(tokens, 1, line_no);
            if (cls.name.empty()) throw ParseError(line_no, head.column, "class name must not be empty");
            if (diagram_.has_class(cls.name))
                throw ParseError(line_no, head.column, "duplicate class name \"" + cls.name + "\"");
            diagram_.classes.push_back(std::move(cls));
            in_class_ = true;
        } else if (head.text == "attr") {
            if (!in_class_) throw ParseError(line_no, head.column, "attr outside a class block");
            expect_shape(tokens, {Token::Type::Quoted, Token::Type::Colon, Token::Type::Quoted}, line_no);
            UmlClass& cls = diagram_.classes.back();
            for (const UmlAttribute& a : cls.attributes) {
                if (a.name == tokens[1].text)
                    throw ParseError(line_no, head.column,
                                     "duplicate attribute \"" + tokens[1].text + "\" in class \"" + cls.name + "\"");
            }
            cls.attributes.push_back({tokens[1].text, tokens[3].text});
        } else if (head.text == "op") {
            if (!in_class_) throw ParseError(line_no, head.column, "op outside a class block");
            diagram_.classes.back().operations.push_back(expect_strings(tokens, 1, line_no));
        } else if (head.text == "inherit" || head.text == "compose" || head.text == "aggregate" ||
                   head.text == "assoc") {
            expect_shape(tokens, {Token::Type::Quoted, Token::Type::Quoted}, line_no);
            UmlRelationship rel;
            rel.source = tokens[1].text;
            rel.target = tokens[2].text;
            rel.kind = head.text == "inherit"     ? RelationKind::Inheritance
                       : head.text == "compose"   ? RelationKind::Composition
                       : head.text == "aggregate" ? RelationKind::Aggregation
                                                  : RelationKind::Association;
            if (rel.kind == RelationKind::Inheritance && rel.source == rel.target)
                throw ParseError(line_no, head.column, "class \"" + rel.source + "\" cannot inherit from itself");
            for (const UmlRelationship& existing : diagram_.relationships) {
                if (existing == rel)
                    throw ParseError(line_no, head.column,
                                     "duplicate relationship " + std::string(to_string(rel.kind)) + " \"" +
                                         rel.source + "\" \"" + rel.target + "\"");
            }
            diagram_.relationships.push_back(rel);
            relationship_lines_.push_back(line_no);
            in_class_ = false;
        } else {
            throw ParseError(line_no, head.column, "unknown directive `" + head.text + "`");
        }
    }

    // Expects `count` quoted strings after the directive and nothing else.
    std::string expect_strings(const std::vector<Token>& tokens, std::size_t count, int line_no) {
        std::vector<Token::Type> shape(count, Token::Type::Quoted);
        expect_shape(tokens, shape, line_no);
        return tokens[1].text;
    }

    void expect_shape(const std::vector<Token>& tokens, const std::vector<Token::Type>& shape, int line_no) {
        for (std::size_t k = 0; k < shape.size(); ++k) {
            if (tokens.size() <= k + 1)
                throw ParseError(line_no, tokens.back().column,
                                 "incomplete `" + tokens.front().text + "` directive");
            if (tokens[k + 1].type != shape[k]) {
                const char* want = shape[k] == Token::Type::Colon ? "`:`" : "a quoted string";
                throw ParseError(line_no, tokens[k + 1].column,
                                 "expected " + std::string(want) + " in `" + tokens.front().text + "` directive");
            }
        }
        if (tokens.size() > shape.size() + 1) {
            const Token& extra = tokens[shape.size() + 1];
            throw ParseError(line_no, extra.column, "unexpected input after `" + tokens.front().text + "` directive");
        }
    }

    // Endpoints may reference classes declared later in the file; resolved here.
    void check_endpoints() const {
        for (std::size_t i = 0; i < diagram_.relationships.size(); ++i) {
            const UmlRelationship& rel = diagram_.relationships[i];
            for (const std::string* endpoint : {&rel.source, &rel.target}) {
                if (!diagram_.has_class(*endpoint))
                    throw ParseError(relationship_lines_[i], 1,
                                     "relationship endpoint \"" + *endpoint + "\" is not a declared class");
            }
        }
    }

    std::string_view text_;
    ClassDiagram diagram_;
    std::vector<int> relationship_lines_;
    bool saw_header_ = false;
    bool in_class_ = false;
};

}  // namespace

ClassDiagram parse_diagram(std::string_view text) { return Parser(text).run(); }

ClassDiagram parse_diagram_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_diagram(buffer.str());
}

ClassDiagram normalized(ClassDiagram diagram) {
    std::sort(diagram.classes.begin(), diagram.classes.end(),
              [](const UmlClass& a, const UmlClass& b) { return a.name < b.name; });
    std::sort(diagram.relationships.begin(), diagram.relationships.end());
    return diagram;
}

std::string serialize_diagram(const ClassDiagram& diagram) {
    const ClassDiagram canon = normalized(diagram);
    std::ostringstream out;
    out << "diagram \"" << escape_label(canon.name) << "\"\n";
    for (const UmlClass& cls : canon.classes) {
        out << "class \"" << escape_label(cls.name) << "\"\n";
        for (const UmlAttribute& attr : cls.attributes)
            out << "  attr \"" << escape_label(attr.name) << "\" : \"" << escape_label(attr.type_name) << "\"\n";
        for (const std::string& op : cls.operations) out << "  op \"" << escape_label(op) << "\"\n";
    }
    for (const UmlRelationship& rel : canon.relationships)
        out << to_string(rel.kind) << " \"" << escape_label(rel.source) << "\" \"" << escape_label(rel.target)
            << "\"\n";
    return out.str();
}

void check_diagram(const ClassDiagram& diagram) {
    if (diagram.name.empty()) throw std::invalid_argument("diagram name must not be empty");
    std::set<std::string_view> names;
    for (const UmlClass& cls : diagram.classes) {
        if (cls.name.empty()) throw std::invalid_argument("class name must not be empty");
        if (!names.insert(cls.name).second)
            throw std::invalid_argument("duplicate class name \"" + cls.name + "\"");
        std::set<std::string_view> attr_names;
        for (const UmlAttribute& attr : cls.attributes) {
            if (!attr_names.insert(attr.name).second)
                throw std::invalid_argument("duplicate attribute \"" + attr.name + "\" in class \"" + cls.name +
                                            "\"");
        }
    }
    std::set<std::tuple<std::string_view, std::string_view, RelationKind>> triples;
    for (const UmlRelationship& rel : diagram.relationships) {
        if (!names.contains(rel.source) || !names.contains(rel.target))
            throw std::invalid_argument("relationship endpoint not declared: " + rel.source + " -> " + rel.target);
        if (rel.kind == RelationKind::Inheritance && rel.source == rel.target)
            throw std::invalid_argument("self-inheritance on \"" + rel.source + "\"");
        if (!triples.insert({rel.source, rel.target, rel.kind}).second)
            throw std::invalid_argument("duplicate relationship " + rel.source + " -> " + rel.target);
    }
}

}  // namespace ucdmerge
