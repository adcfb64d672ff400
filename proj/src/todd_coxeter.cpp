#include "ccauto/todd_coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <queue>

namespace ccauto {

namespace {

// Coset table columns: 2*g for generator g acting on the right, 2*g+1 for
// its inverse.
class CosetTable {
public:
    CosetTable(int num_generators, int max_cosets)
        : ngens_(num_generators), ncols_(2 * num_generators), max_cosets_(max_cosets) {
        new_coset();
    }

    int num_cosets_allocated() const { return static_cast<int>(parent_.size()); }

    bool live(int c) const { return parent_[c] == c; }

    int find(int c) {
        while (parent_[c] != c)
            c = parent_[c] = parent_[parent_[c]];
        return c;
    }

    int get(int c, int col) const { return rows_[static_cast<size_t>(c) * ncols_ + col]; }
    void set(int c, int col, int v) { rows_[static_cast<size_t>(c) * ncols_ + col] = v; }

    static int inv_col(int col) { return col ^ 1; }

    int new_coset() {
        if (num_cosets_allocated() >= max_cosets_)
            throw EnumerationError("coset limit exceeded (" + std::to_string(max_cosets_) +
                                   "); presentation may define a larger group than expected");
        int c = num_cosets_allocated();
        rows_.resize(rows_.size() + ncols_, -1);
        parent_.push_back(c);
        return c;
    }

    void define(int c, int col) {
        int d = new_coset();
        set(c, col, d);
        set(d, inv_col(col), c);
    }

    // Merges the classes of a and b, keeping the smaller index as the
    // representative, and processes all induced coincidences.
    void coincidence(int a, int b) {
        merge_(a, b);
        while (!dead_queue_.empty()) {
            int gamma = dead_queue_.front();
            dead_queue_.pop_front();
            for (int col = 0; col < ncols_; ++col) {
                int delta = get(gamma, col);
                if (delta < 0)
                    continue;
                set(gamma, col, -1);
                // Remove the stale back-pointer before reinstalling the edge.
                if (get(delta, inv_col(col)) == gamma)
                    set(delta, inv_col(col), -1);
                int mu = find(gamma);
                int nu = find(delta);
                int existing = get(mu, col);
                if (existing >= 0) {
                    merge_(nu, find(existing));
                } else {
                    int back = get(nu, inv_col(col));
                    if (back >= 0) {
                        merge_(mu, find(back));
                    } else {
                        set(mu, col, nu);
                        set(nu, inv_col(col), mu);
                    }
                }
            }
        }
    }

    int num_live() {
        int k = 0;
        for (int c = 0; c < num_cosets_allocated(); ++c)
            if (live(c))
                ++k;
        return k;
    }

private:
    void merge_(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        parent_[b] = a;
        dead_queue_.push_back(b);
    }

    int ngens_;
    int ncols_;
    int max_cosets_;
    std::vector<int> rows_;
    std::vector<int> parent_;
    std::deque<int> dead_queue_;
};

// Relator as a flat sequence of columns.
std::vector<int> relator_columns(const Word& w) {
    std::vector<int> cols;
    for (const Letter& l : w.letters) {
        int col = l.exponent > 0 ? 2 * l.generator : 2 * l.generator + 1;
        for (int i = 0; i < std::abs(l.exponent); ++i)
            cols.push_back(col);
    }
    return cols;
}

// Holt-style scan and fill: traces relator w from coset alpha, defining
// cosets to close the gap; a crossed scan triggers a coincidence.
void scan_and_fill(CosetTable& t, int alpha, const std::vector<int>& w) {
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    int f = alpha;
    int b = alpha;
    for (;;) {
        while (i <= j && t.get(f, w[i]) >= 0)
            f = t.get(f, w[i++]);
        if (i > j) {
            if (f != b)
                t.coincidence(f, b);
            return;
        }
        while (j >= i && t.get(b, CosetTable::inv_col(w[j])) >= 0)
            b = t.get(b, CosetTable::inv_col(w[j--]));
        if (j < i) {
            t.coincidence(f, b);
            return;
        }
        if (j == i) {
            t.set(f, w[i], b);
            t.set(b, CosetTable::inv_col(w[i]), f);
            return;
        }
        t.define(f, w[i]);
    }
}

} // namespace

FiniteGroup enumerate_group(const Presentation& p, const EnumerationLimits& limits) {
    if (limits.max_cosets < p.expected_order)
        throw EnumerationError("max_cosets (" + std::to_string(limits.max_cosets) +
                               ") below expected order of '" + p.name + "'");
    int ngens = static_cast<int>(p.generators.size());
    if (ngens == 0 && p.expected_order != 1)
        throw EnumerationError("presentation '" + p.name + "' has no generators");

    std::vector<Word> relators;
    relators.reserve(p.relations.size());
    for (const Relation& r : p.relations) {
        Word rel = relation_to_relator(r);
        if (!rel.empty())
            relators.push_back(std::move(rel));
    }
    std::vector<std::vector<int>> rel_cols;
    rel_cols.reserve(relators.size());
    for (const Word& r : relators)
        rel_cols.push_back(relator_columns(r));

    CosetTable table(std::max(ngens, 1), limits.max_cosets);
    for (int alpha = 0; alpha < table.num_cosets_allocated(); ++alpha) {
        if (!table.live(alpha))
            continue;
        for (const std::vector<int>& w : rel_cols) {
            scan_and_fill(table, alpha, w);
            if (!table.live(alpha))
                break;
        }
        if (!table.live(alpha))
            continue;
        for (int col = 0; col < 2 * ngens; ++col)
            if (table.get(alpha, col) < 0)
                table.define(alpha, col);
    }

    // Compact live cosets in BFS discovery order from coset 0, walking
    // generator columns in declaration order.
    int root = table.find(0);
    std::vector<int> renumber(table.num_cosets_allocated(), -1);
    std::vector<int> order_of_discovery;
    renumber[root] = 0;
    order_of_discovery.push_back(root);
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int c = q.front();
        q.pop();
        for (int g = 0; g < ngens; ++g) {
            int d = table.get(c, 2 * g);
            if (d < 0)
                throw EnumerationError("internal: incomplete coset table for '" + p.name + "'");
            d = table.find(d);
            if (renumber[d] < 0) {
                renumber[d] = static_cast<int>(order_of_discovery.size());
                order_of_discovery.push_back(d);
                q.push(d);
            }
        }
    }
    int n = static_cast<int>(order_of_discovery.size());
    if (n != table.num_live())
        throw EnumerationError("internal: coset graph not connected for '" + p.name + "'");
    if (n != p.expected_order)
        throw EnumerationError("order mismatch for '" + p.name + "': enumerated " + std::to_string(n) +
                               ", expected " + std::to_string(p.expected_order));

    // Compacted generator action.
    std::vector<std::vector<int>> action(ngens, std::vector<int>(n));
    for (int e = 0; e < n; ++e) {
        int c = order_of_discovery[e];
        for (int g = 0; g < ngens; ++g)
            action[g][e] = renumber[table.find(table.get(c, 2 * g))];
    }

    // Canonical word of each element (all-positive exponents) via the same
    // BFS; the multiplication table is the regular representation: a*b
    // traces b's word starting at a.
    std::vector<std::vector<int>> word_of(n);
    {
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        std::queue<int> bq;
        bq.push(0);
        while (!bq.empty()) {
            int e = bq.front();
            bq.pop();
            for (int g = 0; g < ngens; ++g) {
                int f = action[g][e];
                if (!seen[f]) {
                    seen[f] = 1;
                    word_of[f] = word_of[e];
                    word_of[f].push_back(g);
                    bq.push(f);
                }
            }
        }
    }
    std::vector<int> mul_table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int c = a;
            for (int g : word_of[b])
                c = action[g][c];
            mul_table[static_cast<size_t>(a) * n + b] = c;
        }
    }

    std::vector<int> generator_elements(ngens);
    for (int g = 0; g < ngens; ++g)
        generator_elements[g] = action[g][0];

    FiniteGroup group(p.name, n, std::move(mul_table), std::move(generator_elements),
                      std::move(relators), p.generators);
    // Every relator must evaluate to the identity under the canonical
    // assignment; anything else is an enumerator bug.
    for (const Word& r : group.relators())
        if (evaluate_word(group, r) != FiniteGroup::kIdentity)
            throw EnumerationError("internal: relator does not hold in enumerated group '" + p.name +
                                   "'");
    return group;
}

} // namespace ccauto
