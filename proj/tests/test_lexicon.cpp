#include <doctest.h>

#include "test_support.hpp"
#include "ucdmerge/diagram.hpp"
#include "ucdmerge/lexicon.hpp"

using namespace ucdmerge;

TEST_CASE("bundled bilingual lexicon loads and answers membership") {
    const Lexicon lex = Lexicon::load(test::fixture_path("lexicon.tsv"));
    CHECK(lex.term_count() == 10);

    CHECK(lex.synonyms("Monitor", "Ecran"));
    CHECK(lex.synonyms("Ecran", "Monitor"));
    CHECK(lex.synonyms("Storage", "Stockage"));
    CHECK(lex.synonyms("Hard disk", "Disque dur"));
    CHECK(lex.synonyms("System unit", "Unité centrale"));
    CHECK(lex.synonyms("Memory", "Mémoire"));

    CHECK_FALSE(lex.synonyms("Monitor", "Stockage"));
    CHECK_FALSE(lex.synonyms("Keyboard", "Souris"));
    CHECK_FALSE(lex.synonyms("Monitor", "unheard-of"));
}

TEST_CASE("synonymy is closed under symmetry and transitivity") {
    const Lexicon lex = Lexicon::from_pairs({{"screen", "monitor"}, {"monitor", "display"}, {"disk", "disc"}});
    CHECK(lex.synonyms("screen", "display"));
    CHECK(lex.synonyms("display", "screen"));
    CHECK(lex.synonyms("monitor", "screen"));
    CHECK_FALSE(lex.synonyms("screen", "disc"));
    CHECK(lex.term_count() == 5);
}

TEST_CASE("comparisons are case-folded but diacritics are preserved") {
    const Lexicon lex;
    CHECK(lex.synonyms("ECRAN", "ecran"));
    CHECK(lex.synonyms("Écran", "écran"));
    CHECK_FALSE(lex.synonyms("Écran", "Ecran"));  // no diacritic stripping
    CHECK(lex.synonyms("", ""));

    const Lexicon declared = Lexicon::from_pairs({{"MONITOR", "Écran"}});
    CHECK(declared.synonyms("monitor", "écran"));
    CHECK(declared.synonyms("Monitor", "ÉCRAN"));
    CHECK_FALSE(declared.synonyms("monitor", "ecran"));
}

TEST_CASE("an empty lexicon only equates case-folded equal terms") {
    const Lexicon lex;
    CHECK(lex.term_count() == 0);
    CHECK(lex.synonyms("RAM", "ram"));
    CHECK_FALSE(lex.synonyms("RAM", "ROM"));
}

TEST_CASE("parse accepts comments, blank lines, and padding around terms") {
    const Lexicon lex = Lexicon::parse(
        "# bilingual terms\n"
        "\n"
        "  Monitor \t Ecran  \r\n"
        "   # indented comment\n"
        "disk\tdisc");
    CHECK(lex.term_count() == 4);
    CHECK(lex.synonyms("monitor", "ecran"));
    CHECK(lex.synonyms("Disk", "DISC"));
}

TEST_CASE("parse rejects malformed lines with positions") {
    CHECK_THROWS_AS(Lexicon::parse("monitor ecran\n"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("a\tb\tc\n"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("\tb\n"), ParseError);
    CHECK_THROWS_AS(Lexicon::parse("a\t \n"), ParseError);

    try {
        Lexicon::parse("ok\tfine\nbroken line\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("duplicate and redundant pairs are harmless") {
    const Lexicon lex = Lexicon::from_pairs({{"a", "b"}, {"b", "a"}, {"A", "B"}, {"b", "c"}, {"a", "c"}});
    CHECK(lex.term_count() == 3);
    CHECK(lex.synonyms("a", "c"));
}
