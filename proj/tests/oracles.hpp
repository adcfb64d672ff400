#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ccauto/finite_group.hpp"

// Independent brute-force oracles. Everything here recomputes from the
// multiplication table by unfolding definitions, deliberately avoiding the
// library's own algorithms, so the two paths can disagree when one is
// wrong.
namespace ccauto::oracle {

inline std::vector<std::set<int>> conjugacy_classes(const FiniteGroup& g) {
    std::vector<std::set<int>> classes;
    std::vector<char> done(g.order(), 0);
    for (int x = 0; x < g.order(); ++x) {
        if (done[x])
            continue;
        std::set<int> cls;
        for (int c = 0; c < g.order(); ++c)
            cls.insert(g.mul(g.mul(g.inv(c), x), c));
        for (int e : cls)
            done[e] = 1;
        classes.push_back(std::move(cls));
    }
    return classes;
}

inline std::multiset<int> class_sizes(const FiniteGroup& g) {
    std::multiset<int> sizes;
    for (const auto& cls : oracle::conjugacy_classes(g))
        sizes.insert(static_cast<int>(cls.size()));
    return sizes;
}

inline std::set<int> center(const FiniteGroup& g) {
    std::set<int> z;
    for (int x = 0; x < g.order(); ++x) {
        bool central = true;
        for (int y = 0; y < g.order() && central; ++y)
            central = g.mul(x, y) == g.mul(y, x);
        if (central)
            z.insert(x);
    }
    return z;
}

inline std::set<int> centralizer(const FiniteGroup& g, int e) {
    std::set<int> c;
    for (int x = 0; x < g.order(); ++x)
        if (g.mul(x, e) == g.mul(e, x))
            c.insert(x);
    return c;
}

// Every map G -> Z(G) that is a homomorphism, by exhausting all functions
// factored through generator images and checking multiplicativity on all
// pairs after extension; f qualifies for the count when x -> x*f(x) is a
// bijection. This equals the number of central automorphisms.
inline long long bijective_central_hom_count(const FiniteGroup& g) {
    const std::set<int> zset = oracle::center(g);
    std::vector<int> z(zset.begin(), zset.end());
    const std::vector<int>& gens = g.generator_elements();
    int m = static_cast<int>(gens.size());
    const std::vector<Word>& words = g.canonical_words();

    long long count = 0;
    std::vector<int> choice(m, 0);
    std::vector<int> f(g.order());
    for (;;) {
        // f on generators, extended through canonical words inside Z(G)
        // (the target is abelian, so the extension is the word's image).
        std::vector<int> assignment(m);
        for (int i = 0; i < m; ++i)
            assignment[i] = z[choice[i]];
        bool hom = true;
        for (int e = 0; e < g.order() && hom; ++e)
            f[e] = evaluate_word(g, words[e], assignment);
        // f is a homomorphism iff f(a*b) = f(a)f(b) for all pairs.
        for (int a = 0; a < g.order() && hom; ++a)
            for (int b = 0; b < g.order() && hom; ++b)
                hom = f[g.mul(a, b)] == g.mul(f[a], f[b]);
        if (hom) {
            std::vector<char> hit(g.order(), 0);
            bool bijective = true;
            for (int x = 0; x < g.order() && bijective; ++x) {
                int img = g.mul(x, f[x]);
                if (hit[img])
                    bijective = false;
                hit[img] = 1;
            }
            if (bijective)
                ++count;
        }
        // next tuple
        int i = 0;
        while (i < m && ++choice[i] == static_cast<int>(z.size())) {
            choice[i] = 0;
            ++i;
        }
        if (i == m || m == 0)
            break;
    }
    return count;
}

// |Hom(G, Z(G))| by the same exhaustion without the bijectivity filter.
inline long long hom_into_center_count(const FiniteGroup& g) {
    const std::set<int> zset = oracle::center(g);
    std::vector<int> z(zset.begin(), zset.end());
    const std::vector<int>& gens = g.generator_elements();
    int m = static_cast<int>(gens.size());
    const std::vector<Word>& words = g.canonical_words();
    long long count = 0;
    std::vector<int> choice(m, 0);
    std::vector<int> f(g.order());
    for (;;) {
        std::vector<int> assignment(m);
        for (int i = 0; i < m; ++i)
            assignment[i] = z[choice[i]];
        bool hom = true;
        for (int e = 0; e < g.order() && hom; ++e)
            f[e] = evaluate_word(g, words[e], assignment);
        for (int a = 0; a < g.order() && hom; ++a)
            for (int b = 0; b < g.order() && hom; ++b)
                hom = f[g.mul(a, b)] == g.mul(f[a], f[b]);
        if (hom)
            ++count;
        int i = 0;
        while (i < m && ++choice[i] == static_cast<int>(z.size())) {
            choice[i] = 0;
            ++i;
        }
        if (i == m || m == 0)
            break;
    }
    return count;
}

} // namespace ccauto::oracle
