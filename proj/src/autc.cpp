#include "ccauto/autc.hpp"

#include <algorithm>
#include <set>

namespace ccauto {

namespace {

std::vector<int> images_at_generators(const FiniteGroup& g, const std::vector<int>& perm) {
    std::vector<int> out;
    out.reserve(g.generator_elements().size());
    for (int ge : g.generator_elements())
        out.push_back(perm[ge]);
    return out;
}

bool is_closed_automorphism_group(const FiniteGroup& g, const std::vector<Automorphism>& elems) {
    std::set<std::vector<int>> perms;
    for (const Automorphism& a : elems)
        perms.insert(a.perm);
    std::vector<int> identity(g.order());
    for (int i = 0; i < g.order(); ++i)
        identity[i] = i;
    if (!perms.count(identity))
        return false;
    for (const Automorphism& a : elems) {
        std::vector<int> inv(g.order());
        for (int i = 0; i < g.order(); ++i)
            inv[a.perm[i]] = i;
        if (!perms.count(inv))
            return false;
        for (const Automorphism& b : elems) {
            std::vector<int> comp(g.order());
            for (int i = 0; i < g.order(); ++i)
                comp[i] = b.perm[a.perm[i]];
            if (!perms.count(comp))
                return false;
        }
    }
    return true;
}

} // namespace

AutomorphismSet inner_automorphisms(const FiniteGroup& g) {
    std::set<std::vector<int>> perms;
    for (int c = 0; c < g.order(); ++c) {
        std::vector<int> perm(g.order());
        for (int x = 0; x < g.order(); ++x)
            perm[x] = g.conjugate(x, c);
        perms.insert(std::move(perm));
    }
    AutomorphismSet out;
    for (const std::vector<int>& p : perms)
        out.elements.push_back({p, images_at_generators(g, p)});
    int center_order = center(g).size();
    if (static_cast<int>(out.elements.size()) * center_order != g.order())
        throw GroupError("internal: |Inn| * |Z| != |G|");
    out.closed = is_closed_automorphism_group(g, out.elements);
    if (!out.closed)
        throw GroupError("internal: inner automorphisms not closed");
    return out;
}

AutomorphismSet class_preserving_automorphisms(const FiniteGroup& g) {
    int n = g.order();
    ConjugacyPartition classes = conjugacy_classes(g);
    const std::vector<int>& gens = g.generator_elements();
    int m = static_cast<int>(gens.size());

    // Relator pruning: check each relator once all generators it mentions
    // are assigned.
    std::vector<std::vector<const Word*>> relators_by_last_gen(std::max(m, 1));
    for (const Word& r : g.relators()) {
        int last = -1;
        for (const Letter& l : r.letters)
            last = std::max(last, l.generator);
        if (last >= 0)
            relators_by_last_gen[last].push_back(&r);
    }

    std::vector<Automorphism> found;
    std::vector<int> assignment(m, -1);
    std::vector<int> image(n);
    std::vector<char> hit(n);

    auto accept = [&]() {
        // Extend to all elements through canonical words.
        const std::vector<Word>& words = g.canonical_words();
        std::fill(hit.begin(), hit.end(), 0);
        for (int e = 0; e < n; ++e) {
            int img = evaluate_word(g, words[e], assignment);
            if (classes.class_of[img] != classes.class_of[e])
                return; // class preservation must hold at every element
            if (hit[img])
                return; // not a bijection
            hit[img] = 1;
            image[e] = img;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (image[g.mul(a, b)] != g.mul(image[a], image[b]))
                    return;
        found.push_back({image, assignment});
    };

    auto search = [&](auto&& self, int i) -> void {
        if (i == m) {
            accept();
            return;
        }
        for (int candidate : classes.classes[classes.class_of[gens[i]]]) {
            assignment[i] = candidate;
            bool ok = true;
            for (const Word* r : relators_by_last_gen[i])
                if (evaluate_word(g, *r, assignment) != FiniteGroup::kIdentity) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, i + 1);
        }
        assignment[i] = -1;
    };
    if (m == 0) {
        accept(); // trivial group
    } else {
        search(search, 0);
    }

    AutomorphismSet out;
    out.elements = std::move(found);
    std::sort(out.elements.begin(), out.elements.end());
    out.closed = is_closed_automorphism_group(g, out.elements);
    if (!out.closed)
        throw GroupError("internal: class preserving automorphisms not closed under composition");
    return out;
}

int outc_order(const FiniteGroup& g) {
    AutomorphismSet inner = inner_automorphisms(g);
    AutomorphismSet cp = class_preserving_automorphisms(g);
    std::set<std::vector<int>> cp_perms;
    for (const Automorphism& a : cp.elements)
        cp_perms.insert(a.perm);
    for (const Automorphism& a : inner.elements)
        if (!cp_perms.count(a.perm))
            throw GroupError("internal: inner automorphism missed by the class-preserving search");
    if (cp.elements.size() % inner.elements.size() != 0)
        throw GroupError("internal: |Inn| does not divide |Aut_c|");
    return static_cast<int>(cp.elements.size() / inner.elements.size());
}

HomCountReport count_homs(const std::vector<int>& source_invariants, const FiniteGroup& target) {
    if (!is_abelian(target))
        throw GroupError("count_homs requires an abelian target");
    HomCountReport rep;
    rep.source_invariants = source_invariants;
    for (int factor : source_invariants) {
        if (factor < 2)
            throw GroupError("invariant factors must be >= 2");
        long long count = 0;
        for (int t = 0; t < target.order(); ++t)
            if (target.power(t, factor) == FiniteGroup::kIdentity)
                ++count;
        rep.count *= count;
    }
    return rep;
}

long long central_automorphism_count(const FiniteGroup& g) {
    return central_automorphism_count(g, direct_decompositions(g));
}

long long central_automorphism_count(
    const FiniteGroup& g, const std::vector<std::pair<Subgroup, Subgroup>>& decompositions) {
    if (is_abelian(g))
        throw GroupError("central automorphism count formula requires a purely non-abelian group");
    for (const auto& [h, k] : decompositions) {
        if (k.size() > 1 && k.is_abelian())
            throw GroupError("group has a nontrivial abelian direct factor of order " +
                             std::to_string(k.size()) +
                             "; the Hom-count formula does not apply");
        if (h.size() < g.order() && h.is_abelian())
            throw GroupError("group has a nontrivial abelian direct factor of order " +
                             std::to_string(h.size()) +
                             "; the Hom-count formula does not apply");
    }
    QuotientGroup q = quotient_group(g, derived_subgroup(g));
    std::vector<int> invariants = abelian_invariants(q.group);
    FiniteGroup z = materialize_subgroup(g, center(g), g.name() + ".Z");
    return count_homs(invariants, z).count;
}

long long autc_class_bound(const FiniteGroup& g) {
    ConjugacyPartition classes = conjugacy_classes(g);
    long long bound = 1;
    for (int ge : g.generator_elements())
        bound *= static_cast<long long>(classes.classes[classes.class_of[ge]].size());
    return bound;
}

} // namespace ccauto
