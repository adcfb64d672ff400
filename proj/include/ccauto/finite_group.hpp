#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ccauto/word.hpp"

namespace ccauto {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite group as a dense multiplication table over element indices
// 0..n-1, with 0 the identity. Immutable after construction and safe to
// share across threads.
class FiniteGroup {
public:
    static constexpr int kIdentity = 0;

    // table[a*n + b] = a*b. Validates identity laws and the Latin-square
    // property, computes inverses, and assigns every element a canonical
    // word (shortest word in the generators, BFS order ties broken by
    // generator order). Throws GroupError if the generators do not
    // generate or the table is malformed. generator_names defaults to
    // positional names g0, g1, ...
    FiniteGroup(std::string name, int order, std::vector<int> table,
                std::vector<int> generator_elements, std::vector<Word> relators = {},
                std::vector<std::string> generator_names = {});

    int order() const { return n_; }
    const std::string& name() const { return name_; }

    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int power(int e, long long k) const;
    int conjugate(int a, int c) const { return mul(mul(inv(c), a), c); } // c^-1 a c
    int commutator(int a, int b) const { return mul(inv(mul(b, a)), mul(a, b)); } // a^-1 b^-1 a b

    const std::vector<int>& generator_elements() const { return generator_elements_; }
    const std::vector<std::string>& generator_names() const { return generator_names_; }
    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<int>& table() const { return table_; }

    // Canonical word of each element over generator indices; identity is
    // the empty word.
    const std::vector<Word>& canonical_words() const { return canonical_words_; }

private:
    std::string name_;
    int n_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> generator_elements_;
    std::vector<Word> relators_;
    std::vector<std::string> generator_names_;
    std::vector<Word> canonical_words_;
};

// k >= 1 with e^k = identity; divides the group order.
int element_order(const FiniteGroup& g, int e);

// Left-to-right product of assigned elements raised to the word's
// exponents. assignment maps generator index -> element index; -1 marks
// an unassigned generator and evaluating it throws.
int evaluate_word(const FiniteGroup& g, const Word& w, const std::vector<int>& assignment);

// Evaluates under the canonical assignment (generator symbol -> its
// generator element).
int evaluate_word(const FiniteGroup& g, const Word& w);

const std::vector<Word>& canonical_words(const FiniteGroup& g);

struct AxiomsReport {
    bool ok = true;
    std::string first_violation; // empty when ok
    long long triples_checked = 0;
};

// Exhaustive check in order: identity laws, inverse relations,
// associativity over all n^3 triples, Latin-square rows and columns.
// Reports the first counterexample found. Works on raw tables so it can
// serve as an oracle for candidate tables that never became a FiniteGroup.
AxiomsReport check_table_axioms(int n, const std::vector<int>& table);
AxiomsReport check_group_axioms(const FiniteGroup& g);

// Table dump: first line "order n", then n rows of n indices (row e lists
// the products e*f for f = 0..n-1).
std::string dump_table(const FiniteGroup& g);

} // namespace ccauto
