#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccauto/word.hpp"

namespace ccauto {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error(message + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// lhs = rhs; a bare relator is lhs = identity.
struct Relation {
    Word lhs;
    Word rhs;
};

struct Presentation {
    std::string name;
    int expected_order = 1;
    std::vector<std::string> generators; // unique, case-sensitive
    std::vector<Relation> relations;

    int generator_index(std::string_view name) const; // -1 if absent
};

struct Catalog {
    std::vector<Presentation> entries; // file order, unique names

    const Presentation* find(std::string_view name) const;
};

// Exponent magnitudes are capped to keep word expansion bounded.
inline constexpr int kMaxExponent = 1 << 16;

// Line-oriented catalog text, '#' starts a comment. Grammar:
//   file   := stanza*
//   stanza := "group" NAME "expected_order" INT
//             "gens" NAME+
//             ("rel" WORD ("=" WORD)?)*
//             "end"
//   WORD   := term ("*" term)*
//   term   := atom ("^" INT)?
//   atom   := NAME | "(" WORD ")" | "[" WORD "," WORD "]"
Catalog parse_catalog(std::string_view text);

// Parses a single word against a generator list. Words are returned freely
// reduced; "[a,b]" expands to a^-1 b^-1 a b, "(w)^k" by repetition.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

// Freely reduced lhs * rhs^-1; evaluates to the identity in any group
// satisfying the relation.
Word relation_to_relator(const Relation& r);

} // namespace ccauto
