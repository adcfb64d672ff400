#include "ccauto/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ccauto {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (l.exponent == 0)
        return;
    while (!out.empty() && out.back().generator == l.generator) {
        l.exponent += out.back().exponent;
        out.pop_back();
        if (l.exponent == 0)
            return;
    }
    out.push_back(l);
}

} // namespace

Word::Word(std::vector<Letter> raw) {
    letters.reserve(raw.size());
    for (const Letter& l : raw)
        push_reduced(letters, l);
}

int Word::length() const {
    int n = 0;
    for (const Letter& l : letters)
        n += std::abs(l.exponent);
    return n;
}

Word word_single(int generator, int exponent) {
    Word w;
    if (exponent != 0)
        w.letters.push_back({generator, exponent});
    return w;
}

Word word_concat(const Word& a, const Word& b) {
    Word out;
    out.letters = a.letters;
    for (const Letter& l : b.letters)
        push_reduced(out.letters, l);
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->generator, -it->exponent});
    return out;
}

Word word_power(const Word& w, int k) {
    if (k == 0)
        return Word{};
    Word base = k < 0 ? word_inverse(w) : w;
    int reps = std::abs(k);
    Word out;
    for (int i = 0; i < reps; ++i)
        out = word_concat(out, base);
    return out;
}

Word word_commutator(const Word& a, const Word& b) {
    return word_concat(word_concat(word_inverse(a), word_inverse(b)), word_concat(a, b));
}

std::string render_word(const Word& w, const std::vector<std::string>& generator_names) {
    if (w.empty())
        return "1";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        const Letter& l = w.letters[i];
        if (l.generator < 0 || static_cast<size_t>(l.generator) >= generator_names.size())
            throw std::out_of_range("render_word: generator index out of range");
        if (i > 0)
            out += '*';
        out += generator_names[l.generator];
        if (l.exponent != 1) {
            out += '^';
            out += std::to_string(l.exponent);
        }
    }
    return out;
}

} // namespace ccauto
