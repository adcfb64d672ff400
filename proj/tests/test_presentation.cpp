#include <doctest.h>

#include <random>

#include "ccauto/presentation.hpp"

using namespace ccauto;

namespace {
const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};
} // namespace

TEST_CASE("free reduction and word algebra") {
    Word w({{0, 1}, {0, 2}, {1, -1}, {1, 1}, {0, -3}});
    CHECK(w.empty()); // x^3 y^-1 y x^-3 collapses stepwise

    Word v = word_concat(word_single(0, 2), word_single(0, -2));
    CHECK(v.empty());

    Word c = word_commutator(word_single(0, 1), word_single(1, 1));
    CHECK(c.letters == std::vector<Letter>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});

    Word p = word_power(word_concat(word_single(0, 1), word_single(1, 1)), 2);
    CHECK(p.letters == std::vector<Letter>{{0, 1}, {1, 1}, {0, 1}, {1, 1}});
    CHECK(word_power(p, 0).empty());
    CHECK(word_inverse(p).letters == std::vector<Letter>{{1, -1}, {0, -1}, {1, -1}, {0, -1}});
}

TEST_CASE("parse_word basics") {
    CHECK(parse_word("[x,y]", xy).letters ==
          std::vector<Letter>{{0, -1}, {1, -1}, {0, 1}, {1, 1}});
    CHECK(parse_word("x*x^-1", xy).empty());
    CHECK(parse_word("(x*y)^2", xy).letters ==
          std::vector<Letter>{{0, 1}, {1, 1}, {0, 1}, {1, 1}});
    CHECK(parse_word("x^5", xy).letters == std::vector<Letter>{{0, 5}});
    CHECK(parse_word("[[x,y],z]", xyz) ==
          word_commutator(word_commutator(word_single(0, 1), word_single(1, 1)),
                          word_single(2, 1)));
    CHECK(parse_word("(x)^-2", xy).letters == std::vector<Letter>{{0, -2}});
}

TEST_CASE("parse_word rejects malformed input") {
    CHECK_THROWS_AS(parse_word("x^0", xy), ParseError);
    CHECK_THROWS_AS(parse_word("w", xy), ParseError);    // unknown generator
    CHECK_THROWS_AS(parse_word("xy", xy), ParseError);   // juxtaposition is a single unknown name
    CHECK_THROWS_AS(parse_word("x y", xy), ParseError);  // missing '*'
    CHECK_THROWS_AS(parse_word("x*", xy), ParseError);
    CHECK_THROWS_AS(parse_word("", xy), ParseError);
    CHECK_THROWS_AS(parse_word("x^999999", xy), ParseError); // exponent cap
    CHECK_THROWS_AS(parse_word("(x", xy), ParseError);
    CHECK_THROWS_AS(parse_word("[x,y", xy), ParseError);
}

TEST_CASE("word render round-trip") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> gen(0, 2);
    std::uniform_int_distribution<int> exp(-6, 6);
    std::uniform_int_distribution<int> len(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> letters;
        int L = len(rng);
        for (int i = 0; i < L; ++i) {
            int e = exp(rng);
            if (e == 0)
                e = 1;
            letters.push_back({gen(rng), e});
        }
        Word w(letters); // freely reduced
        if (w.empty())
            continue;
        CHECK(parse_word(render_word(w, xyz), xyz) == w);
    }
}

TEST_CASE("free reduction is idempotent and length-non-increasing") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, 2);
    std::uniform_int_distribution<int> exp(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> letters;
        int raw_len = 0;
        for (int i = 0; i < 10; ++i) {
            int e = exp(rng);
            if (e == 0)
                continue;
            letters.push_back({gen(rng), e});
            raw_len += std::abs(e);
        }
        Word w(letters);
        CHECK(w.length() <= raw_len);
        CHECK(Word(w.letters) == w);
    }
}

TEST_CASE("relation_to_relator") {
    Relation r1{parse_word("y*x", xy), parse_word("x*y^5", xy)};
    CHECK(relation_to_relator(r1).letters ==
          std::vector<Letter>{{1, 1}, {0, 1}, {1, -5}, {0, -1}});

    Relation r2{parse_word("x^5", xy), Word{}};
    CHECK(relation_to_relator(r2).letters == std::vector<Letter>{{0, 5}});

    Relation r3{parse_word("x", xy), parse_word("x", xy)};
    CHECK(relation_to_relator(r3).empty());
}

TEST_CASE("parse_catalog minimal file") {
    Catalog cat = parse_catalog("group C5 expected_order 5\ngens x\nrel x^5\nend\n");
    REQUIRE(cat.entries.size() == 1);
    const Presentation& p = cat.entries[0];
    CHECK(p.name == "C5");
    CHECK(p.expected_order == 5);
    REQUIRE(p.generators.size() == 1);
    CHECK(p.generators[0] == "x");
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].lhs.letters == std::vector<Letter>{{0, 5}});
    CHECK(p.relations[0].rhs.empty());
}

TEST_CASE("parse_catalog relation with two sides") {
    Catalog cat = parse_catalog("# comment\n"
                                "group G44 expected_order 32\n"
                                "gens x y z\n"
                                "rel y*x = x*y^5\n"
                                "end\n");
    const Presentation& p = cat.entries[0];
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].lhs.letters == std::vector<Letter>{{1, 1}, {0, 1}});
    CHECK(p.relations[0].rhs.letters == std::vector<Letter>{{0, 1}, {1, 5}});
}

TEST_CASE("parse_catalog error paths") {
    // stanza content before any group header
    CHECK_THROWS_AS(parse_catalog("gens x\n"), ParseError);
    try {
        parse_catalog("\n\ngens x\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    // duplicate group names
    CHECK_THROWS_AS(parse_catalog("group A expected_order 1\ngens x\nend\n"
                                  "group A expected_order 1\ngens x\nend\n"),
                    ParseError);
    // unknown generator inside a word
    CHECK_THROWS_AS(parse_catalog("group A expected_order 2\ngens x\nrel w^2\nend\n"), ParseError);
    // duplicate generator
    CHECK_THROWS_AS(parse_catalog("group A expected_order 2\ngens x x\nend\n"), ParseError);
    // missing end
    CHECK_THROWS_AS(parse_catalog("group A expected_order 2\ngens x\nrel x^2\n"), ParseError);
    // junk after end
    CHECK_THROWS_AS(parse_catalog("group A expected_order 2\ngens x\nend junk\n"), ParseError);
    // non-positive order
    CHECK_THROWS_AS(parse_catalog("group A expected_order 0\ngens x\nend\n"), ParseError);
}
