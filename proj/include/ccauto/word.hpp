#pragma once

#include <string>
#include <vector>

namespace ccauto {

// One syllable of a word: generator index (0-based) raised to a nonzero power.
struct Letter {
    int generator = 0;
    int exponent = 0;
    bool operator==(const Letter&) const = default;
};

// Freely reduced word over numbered generators. The empty word is the identity.
// All constructors and operations below keep the reduced-form invariant:
// no adjacent letters share a generator, no letter has exponent zero.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> raw);

    bool empty() const { return letters.empty(); }
    bool operator==(const Word&) const = default;

    // Sum of |exponent| over all letters.
    int length() const;
};

Word word_single(int generator, int exponent);
Word word_concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);
Word word_power(const Word& w, int k);
// [a,b] = a^-1 b^-1 a b
Word word_commutator(const Word& a, const Word& b);

// Deterministic text form, parseable by parse_word: terms joined with '*',
// exponent suffix '^k' when k != 1. The empty word renders as "1" (display
// only; "1" is not part of the input grammar).
std::string render_word(const Word& w, const std::vector<std::string>& generator_names);

} // namespace ccauto
