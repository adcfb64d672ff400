#include "ccauto/finite_group.hpp"

#include <algorithm>
#include <queue>

namespace ccauto {

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table,
                         std::vector<int> generator_elements, std::vector<Word> relators,
                         std::vector<std::string> generator_names)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      generator_elements_(std::move(generator_elements)),
      relators_(std::move(relators)),
      generator_names_(std::move(generator_names)) {
    if (n_ < 1)
        throw GroupError("group order must be positive");
    if (generator_names_.empty())
        for (size_t i = 0; i < generator_elements_.size(); ++i)
            generator_names_.push_back("g" + std::to_string(i));
    if (generator_names_.size() != generator_elements_.size())
        throw GroupError("generator name list does not match generator elements");
    if (table_.size() != static_cast<size_t>(n_) * n_)
        throw GroupError("multiplication table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= n_)
            throw GroupError("multiplication table entry out of range");
    for (int g : generator_elements_)
        if (g < 0 || g >= n_)
            throw GroupError("generator element out of range");

    for (int a = 0; a < n_; ++a) {
        if (mul(kIdentity, a) != a || mul(a, kIdentity) != a)
            throw GroupError("element 0 is not an identity");
    }
    // Latin square: every row and column is a permutation.
    std::vector<char> seen(n_);
    for (int a = 0; a < n_; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n_; ++b) {
            if (seen[mul(a, b)]++)
                throw GroupError("row " + std::to_string(a) + " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n_; ++b) {
            if (seen[mul(b, a)]++)
                throw GroupError("column " + std::to_string(a) + " is not a permutation");
        }
    }
    inverse_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (mul(a, b) == kIdentity) {
                if (mul(b, a) != kIdentity)
                    throw GroupError("one-sided inverse at element " + std::to_string(a));
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0)
            throw GroupError("element without inverse: " + std::to_string(a));
    }

    // BFS from the identity over right multiplication by generators.
    canonical_words_.assign(n_, Word{});
    std::vector<char> reached(n_, 0);
    reached[kIdentity] = 1;
    std::queue<int> q;
    q.push(kIdentity);
    int count = 1;
    while (!q.empty()) {
        int e = q.front();
        q.pop();
        for (size_t gi = 0; gi < generator_elements_.size(); ++gi) {
            int f = mul(e, generator_elements_[gi]);
            if (!reached[f]) {
                reached[f] = 1;
                canonical_words_[f] =
                    word_concat(canonical_words_[e], word_single(static_cast<int>(gi), 1));
                q.push(f);
                ++count;
            }
        }
    }
    if (count != n_)
        throw GroupError("generator elements do not generate the group (reached " +
                         std::to_string(count) + " of " + std::to_string(n_) + ")");
}

int FiniteGroup::power(int e, long long k) const {
    int base = e;
    if (k < 0) {
        base = inv(e);
        k = -k;
    }
    int acc = kIdentity;
    while (k > 0) {
        if (k & 1)
            acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

int element_order(const FiniteGroup& g, int e) {
    if (e < 0 || e >= g.order())
        throw GroupError("element index out of range");
    int k = 1;
    int cur = e;
    while (cur != FiniteGroup::kIdentity) {
        cur = g.mul(cur, e);
        ++k;
    }
    return k;
}

int evaluate_word(const FiniteGroup& g, const Word& w, const std::vector<int>& assignment) {
    int acc = FiniteGroup::kIdentity;
    for (const Letter& l : w.letters) {
        if (l.generator < 0 || static_cast<size_t>(l.generator) >= assignment.size() ||
            assignment[l.generator] < 0)
            throw GroupError("unassigned generator " + std::to_string(l.generator) +
                             " in word evaluation");
        acc = g.mul(acc, g.power(assignment[l.generator], l.exponent));
    }
    return acc;
}

int evaluate_word(const FiniteGroup& g, const Word& w) {
    return evaluate_word(g, w, g.generator_elements());
}

const std::vector<Word>& canonical_words(const FiniteGroup& g) {
    return g.canonical_words();
}

AxiomsReport check_table_axioms(int n, const std::vector<int>& table) {
    AxiomsReport rep;
    if (n < 1 || table.size() != static_cast<size_t>(n) * n) {
        rep.ok = false;
        rep.first_violation = "table size does not match order";
        return rep;
    }
    auto mul = [&](int a, int b) { return table[static_cast<size_t>(a) * n + b]; };
    for (int v : table)
        if (v < 0 || v >= n) {
            rep.ok = false;
            rep.first_violation = "table entry out of range";
            return rep;
        }
    for (int a = 0; a < n; ++a) {
        if (mul(FiniteGroup::kIdentity, a) != a || mul(a, FiniteGroup::kIdentity) != a) {
            rep.ok = false;
            rep.first_violation = "identity law fails at element " + std::to_string(a);
            return rep;
        }
    }
    // a*b = 1 must imply b*a = 1, and every element needs some inverse.
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == FiniteGroup::kIdentity) {
                if (mul(b, a) != FiniteGroup::kIdentity) {
                    rep.ok = false;
                    rep.first_violation = "one-sided inverse at pair (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")";
                    return rep;
                }
                found = b;
            }
        }
        if (found < 0) {
            rep.ok = false;
            rep.first_violation = "element without inverse: " + std::to_string(a);
            return rep;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                ++rep.triples_checked;
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    rep.ok = false;
                    rep.first_violation = "associativity fails at (" + std::to_string(a) + "," +
                                          std::to_string(b) + "," + std::to_string(c) + ")";
                    return rep;
                }
            }
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b)
            seen[mul(a, b)] = 1;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) {
                rep.ok = false;
                rep.first_violation = "row " + std::to_string(a) + " misses element " + std::to_string(v);
                return rep;
            }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b)
            seen[mul(b, a)] = 1;
        for (int v = 0; v < n; ++v)
            if (!seen[v]) {
                rep.ok = false;
                rep.first_violation =
                    "column " + std::to_string(a) + " misses element " + std::to_string(v);
                return rep;
            }
    }
    return rep;
}

AxiomsReport check_group_axioms(const FiniteGroup& g) {
    return check_table_axioms(g.order(), g.table());
}

std::string dump_table(const FiniteGroup& g) {
    std::string out = "order " + std::to_string(g.order()) + "\n";
    for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
            if (b)
                out += ' ';
            out += std::to_string(g.mul(a, b));
        }
        out += '\n';
    }
    return out;
}

} // namespace ccauto
