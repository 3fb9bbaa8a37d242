#include "ucdmerge/similarity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ucdmerge/text.hpp"

namespace ucdmerge {

void SimilarityConfig::check() const {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw std::invalid_argument("similarity threshold must lie in (0, 1]");
    for (const double w : {weights.edit, weights.trigram, weights.synonym}) {
        if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("measure weights must lie in [0, 1]");
    }
    if (weights.edit <= 0.0 && weights.trigram <= 0.0 && weights.synonym <= 0.0)
        throw std::invalid_argument("at least one measure weight must be positive");
}

double levenshtein_sim(std::string_view a, std::string_view b) {
    const std::u32string fa = casefold_utf8(a);
    const std::u32string fb = casefold_utf8(b);
    const std::size_t n = fa.size();
    const std::size_t m = fb.size();
    if (n == 0 && m == 0) return 1.0;

    std::vector<std::size_t> prev(m + 1);
    std::vector<std::size_t> curr(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t subst = prev[j - 1] + (fa[i - 1] == fb[j - 1] ? 0 : 1);
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, subst});
        }
        std::swap(prev, curr);
    }
    const double dist = static_cast<double>(prev[m]);
    return 1.0 - dist / static_cast<double>(std::max(n, m));
}

namespace {

// Sentinels sit outside the Unicode range so they cannot collide with label
// content. Empty strings produce the empty trigram set.
std::set<std::u32string> trigram_set(std::string_view s) {
    std::set<std::u32string> out;
    const std::u32string folded = casefold_utf8(s);
    if (folded.empty()) return out;
    std::u32string padded;
    padded.reserve(folded.size() + 4);
    padded.push_back(0x110000);
    padded.push_back(0x110000);
    padded += folded;
    padded.push_back(0x110001);
    padded.push_back(0x110001);
    for (std::size_t i = 0; i + 3 <= padded.size(); ++i) out.insert(padded.substr(i, 3));
    return out;
}

}  // namespace

double trigram_sim(std::string_view a, std::string_view b) {
    const std::set<std::u32string> ta = trigram_set(a);
    const std::set<std::u32string> tb = trigram_set(b);
    if (ta.empty() && tb.empty()) return 1.0;
    std::size_t common = 0;
    for (const std::u32string& t : ta) common += tb.contains(t) ? 1 : 0;
    return 2.0 * static_cast<double>(common) / static_cast<double>(ta.size() + tb.size());
}

double synonym_sim(std::string_view a, std::string_view b, const Lexicon& lexicon) {
    return lexicon.synonyms(a, b) ? 1.0 : 0.0;
}

double combined_sim(const Concept& a, const Concept& b, const SimilarityConfig& config, const Lexicon& lexicon) {
    config.check();
    double weighted_sum = 0.0;
    double weight_sum = 0.0;
    double best = 0.0;
    const auto apply = [&](double weight, double score) {
        if (weight <= 0.0) return;
        weighted_sum += weight * score;
        weight_sum += weight;
        best = std::max(best, score);
    };
    apply(config.weights.edit, levenshtein_sim(a.label, b.label));
    apply(config.weights.trigram, trigram_sim(a.label, b.label));
    apply(config.weights.synonym, synonym_sim(a.label, b.label, lexicon));
    return config.combiner == Combiner::Max ? best : weighted_sum / weight_sum;
}

}  // namespace ucdmerge
