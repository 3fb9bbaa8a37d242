#include "ucdmerge/lexicon.hpp"

#include <fstream>
#include <sstream>

#include "ucdmerge/diagram.hpp"
#include "ucdmerge/text.hpp"

namespace ucdmerge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Lexicon Lexicon::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Lexicon lex;
    for (const auto& [a, b] : pairs) lex.add_pair(a, b);
    return lex;
}

Lexicon Lexicon::parse(std::string_view text) {
    Lexicon lex;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        ++line_no;
        const std::string_view stripped = trim(line);
        if (!stripped.empty() && stripped.front() != '#') {
            const std::size_t tab = line.find('\t');
            if (tab == std::string_view::npos)
                throw ParseError(line_no, 1, "expected `termA<TAB>termB`");
            const std::string_view a = trim(line.substr(0, tab));
            std::string_view rest = line.substr(tab + 1);
            if (rest.find('\t') != std::string_view::npos)
                throw ParseError(line_no, static_cast<int>(tab) + 2, "expected exactly two tab-separated terms");
            const std::string_view b = trim(rest);
            if (a.empty() || b.empty()) throw ParseError(line_no, 1, "empty term");
            lex.add_pair(a, b);
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

void Lexicon::add_pair(std::string_view a, std::string_view b) {
    const auto intern = [this](std::string_view term) {
        const std::u32string key = casefold_utf8(term);
        const auto [it, inserted] = group_of_.try_emplace(key, static_cast<int>(parent_.size()));
        if (inserted) parent_.push_back(it->second);
        return it->second;
    };
    const int ra = find_root(intern(a));
    const int rb = find_root(intern(b));
    if (ra != rb) parent_[rb] = ra;
}

int Lexicon::find_root(int idx) const {
    while (parent_[idx] != idx) {
        parent_[idx] = parent_[parent_[idx]];
        idx = parent_[idx];
    }
    return idx;
}

bool Lexicon::synonyms(std::string_view a, std::string_view b) const {
    const std::u32string ka = casefold_utf8(a);
    const std::u32string kb = casefold_utf8(b);
    if (ka == kb) return true;
    const auto ita = group_of_.find(ka);
    const auto itb = group_of_.find(kb);
    if (ita == group_of_.end() || itb == group_of_.end()) return false;
    return find_root(ita->second) == find_root(itb->second);
}

}  // namespace ucdmerge
