#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ucdmerge {

/// Synonym pairs backing the alignment, e.g. cross-language label
/// equivalences. Declared pairs are closed under symmetry and transitivity
/// on load, so `synonyms` answers membership in the closure.
class Lexicon {
public:
    Lexicon() = default;

    static Lexicon from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    // Tab-separated text, one `termA<TAB>termB` pair per line. Lines whose
    // first non-blank character is `#` are comments. Throws ParseError on
    // malformed lines.
    static Lexicon parse(std::string_view text);
    static Lexicon load(const std::filesystem::path& path);

    // True iff a and b are equal after case folding or connected through
    // declared pairs. Comparisons are case-folded.
    bool synonyms(std::string_view a, std::string_view b) const;

    std::size_t term_count() const { return group_of_.size(); }

private:
    void add_pair(std::string_view a, std::string_view b);
    int find_root(int idx) const;

    std::map<std::u32string, int> group_of_;  // folded term -> union-find node
    mutable std::vector<int> parent_;
};

}  // namespace ucdmerge
