#include <cmath>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "test_support.hpp"
#include "ucdmerge/similarity.hpp"

using namespace ucdmerge;

namespace {

Concept concept_of(std::string label) { return {std::move(label), {}, {}}; }

}  // namespace

TEST_CASE("edit-distance similarity on known pairs") {
    // One deletion out of seven code points.
    CHECK(levenshtein_sim("Monitor", "Monitr") == doctest::Approx(6.0 / 7.0));
    // One substitution out of three.
    CHECK(levenshtein_sim("RAM", "ROM") == doctest::Approx(2.0 / 3.0));
    CHECK(levenshtein_sim("disk", "disc") == doctest::Approx(3.0 / 4.0));
    // Accented labels count code points, not bytes: one substitution in seven.
    CHECK(levenshtein_sim("Memory", "Mémoire") == doctest::Approx(1.0 - 3.0 / 7.0));
    CHECK(levenshtein_sim("abc", "xyz") == doctest::Approx(0.0));
}

TEST_CASE("edit-distance similarity conventions") {
    CHECK(levenshtein_sim("", "") == doctest::Approx(1.0));
    CHECK(levenshtein_sim("abc", "") == doctest::Approx(0.0));
    CHECK(levenshtein_sim("", "abc") == doctest::Approx(0.0));
    CHECK(levenshtein_sim("Cache", "cache") == doctest::Approx(1.0));
    CHECK(levenshtein_sim("Écran", "écran") == doctest::Approx(1.0));
}

TEST_CASE("trigram similarity on known pairs") {
    // Padded trigram sets of four-letter words share half their elements.
    CHECK(trigram_sim("disk", "disc") == doctest::Approx(0.5));
    // ram/rom: padded sets of five trigrams each, two in common.
    CHECK(trigram_sim("RAM", "ROM") == doctest::Approx(0.4));
    CHECK(trigram_sim("Cache", "Cache") == doctest::Approx(1.0));
    CHECK(trigram_sim("abc", "xyz") == doctest::Approx(0.0));
}

TEST_CASE("trigram similarity conventions") {
    CHECK(trigram_sim("", "") == doctest::Approx(1.0));
    CHECK(trigram_sim("a", "") == doctest::Approx(0.0));
    CHECK(trigram_sim("", "a") == doctest::Approx(0.0));
    // Single characters produce three padded trigrams; identity still scores 1.
    CHECK(trigram_sim("a", "A") == doctest::Approx(1.0));
    CHECK(trigram_sim("a", "b") == doctest::Approx(0.0));
}

TEST_CASE("synonym similarity is binary and lexicon-driven") {
    const Lexicon lex = Lexicon::from_pairs({{"Monitor", "Ecran"}});
    CHECK(synonym_sim("Monitor", "Ecran", lex) == doctest::Approx(1.0));
    CHECK(synonym_sim("monitor", "ECRAN", lex) == doctest::Approx(1.0));
    CHECK(synonym_sim("Monitor", "Monitor", lex) == doctest::Approx(1.0));
    CHECK(synonym_sim("Monitor", "Stockage", lex) == doctest::Approx(0.0));
    CHECK(synonym_sim("Monitor", "Ecran", Lexicon()) == doctest::Approx(0.0));
}

TEST_CASE("max combiner takes the best enabled raw score") {
    const Lexicon lex = Lexicon::from_pairs({{"RAM", "ROM"}});
    SimilarityConfig cfg;
    cfg.combiner = Combiner::Max;

    // Synonym kernel wins outright even with a small positive weight.
    cfg.weights = {0.0, 0.0, 0.1};
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, lex) == doctest::Approx(1.0));

    // Without the lexicon entry the best raw score is the edit kernel's 2/3.
    cfg.weights = {1.0, 1.0, 1.0};
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, Lexicon()) == doctest::Approx(2.0 / 3.0));

    // Disabling a measure removes it from consideration.
    cfg.weights = {0.0, 1.0, 0.0};
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, Lexicon()) == doctest::Approx(0.4));

    // Identical labels score 1.0 through any single enabled measure.
    for (const MeasureWeights w :
         {MeasureWeights{0.3, 0.0, 0.0}, MeasureWeights{0.0, 0.7, 0.0}, MeasureWeights{0.0, 0.0, 0.2}}) {
        cfg.weights = w;
        CHECK(combined_sim(concept_of("Cache"), concept_of("cache"), cfg, Lexicon()) == doctest::Approx(1.0));
    }
}

TEST_CASE("weighted average combiner") {
    SimilarityConfig cfg;
    cfg.combiner = Combiner::WeightedAverage;
    cfg.weights = {1.0, 1.0, 1.0};
    const Lexicon empty;

    // (2/3 + 0.4 + 0) / 3 with unit weights.
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, empty) ==
          doctest::Approx((2.0 / 3.0 + 0.4) / 3.0));

    // With the synonym entry the third term becomes 1.
    const Lexicon lex = Lexicon::from_pairs({{"RAM", "ROM"}});
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, lex) ==
          doctest::Approx((2.0 / 3.0 + 0.4 + 1.0) / 3.0));

    // Unequal weights shift the average; divisor is the weight sum.
    cfg.weights = {1.0, 0.5, 0.0};
    CHECK(combined_sim(concept_of("RAM"), concept_of("ROM"), cfg, empty) ==
          doctest::Approx((2.0 / 3.0 + 0.5 * 0.4) / 1.5));

    cfg.weights = {1.0, 1.0, 1.0};
    CHECK(combined_sim(concept_of("Cache"), concept_of("Cache"), cfg, lex) == doctest::Approx(1.0));
}

TEST_CASE("config validation") {
    SimilarityConfig cfg;
    CHECK_NOTHROW(cfg.check());

    cfg.threshold = 0.0;
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    cfg.threshold = 1.0;
    CHECK_NOTHROW(cfg.check());
    cfg.threshold = 1.0001;
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    cfg.threshold = -0.2;
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);

    cfg.threshold = 0.8;
    cfg.weights = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    cfg.weights = {1.2, 1.0, 1.0};
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    cfg.weights = {1.0, -0.1, 1.0};
    CHECK_THROWS_AS(cfg.check(), std::invalid_argument);
    cfg.weights = {0.0, 0.0, 0.5};
    CHECK_NOTHROW(cfg.check());
}

TEST_CASE("kernels agree with reference implementations on random pairs") {
    std::mt19937 rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        const std::string a = test::random_label(rng);
        const std::string b = test::random_label(rng);
        CHECK(levenshtein_sim(a, b) == doctest::Approx(test::levenshtein_reference(a, b)).epsilon(1e-12));
        CHECK(trigram_sim(a, b) == doctest::Approx(test::trigram_reference(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("kernels are symmetric, bounded, and reflexive on random labels") {
    std::mt19937 rng(77);
    const Lexicon lex = Lexicon::from_pairs({{"alpha", "beta"}});
    for (int iter = 0; iter < 200; ++iter) {
        const std::string a = test::random_label(rng);
        const std::string b = test::random_label(rng);
        for (const double v : {levenshtein_sim(a, b), trigram_sim(a, b), synonym_sim(a, b, lex)}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(levenshtein_sim(a, b) == doctest::Approx(levenshtein_sim(b, a)));
        CHECK(trigram_sim(a, b) == doctest::Approx(trigram_sim(b, a)));
        CHECK(synonym_sim(a, b, lex) == doctest::Approx(synonym_sim(b, a, lex)));
        CHECK(levenshtein_sim(a, a) == doctest::Approx(1.0));
        CHECK(trigram_sim(a, a) == doctest::Approx(1.0));
        CHECK(synonym_sim(a, a, lex) == doctest::Approx(1.0));
    }
}
