#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ccauto/finite_group.hpp"

namespace ccauto {

// Element subset of a FiniteGroup closed under product and inverse.
// Membership is a 64-bit mask over element indices, so subgroup algebra
// stays word-sized; parents of order > 64 are rejected.
class Subgroup {
public:
    Subgroup(const FiniteGroup& parent, uint64_t mask);

    const FiniteGroup& parent() const { return *parent_; }
    uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(int e) const { return (mask_ >> e) & 1; }
    std::vector<int> elements() const;

    bool is_normal() const;
    bool is_abelian() const;
    bool is_trivial() const { return mask_ == 1; }
    bool is_whole_group() const;

    bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && mask_ == o.mask_; }
    bool operator<(const Subgroup& o) const { return mask_ < o.mask_; }

private:
    const FiniteGroup* parent_;
    uint64_t mask_;
};

struct ConjugacyPartition {
    std::vector<int> class_of;              // element -> class id
    std::vector<std::vector<int>> classes;  // ascending elements, classes ordered by representative
    std::vector<int> representatives;       // least element of each class
};

struct CentralSeriesReport {
    std::vector<Subgroup> lower; // gamma_1 = G down to the trivial subgroup
    std::vector<Subgroup> upper; // Z_0 = 1 up to G
    int nilpotency_class = 0;
};

struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> projection; // parent element -> quotient element
};

struct CommutatorSet {
    std::vector<int> elements; // ascending
    bool is_subgroup = false;
};

ConjugacyPartition conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int e);
Subgroup center(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed);
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& H, const Subgroup& K);

// The set {[x,e] : e in G}; the flag reports whether the set happens to be
// closed (always true when the group has nilpotency class <= 2).
CommutatorSet commutator_set(const FiniteGroup& g, int x);

Subgroup derived_subgroup(const FiniteGroup& g); // gamma_2 = [G,G]

// Both central series computed by their defining recurrences until
// stabilization; throws GroupError for non-nilpotent input.
CentralSeriesReport central_series(const FiniteGroup& g);

// gamma_2(G) * G^p for a p-group.
Subgroup frattini_subgroup(const FiniteGroup& g);

// Throws GroupError when N is not normal. The quotient's identity is the
// coset of the identity; cosets are numbered by their least element.
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& N);

// Cyclic factor orders p^{a_1} >= p^{a_2} >= ... of an abelian group of
// prime-power order, recovered from the counts of elements of order
// dividing p^k.
std::vector<int> abelian_invariants(const FiniteGroup& g);

// All subgroups H with N <= H <= G, for N containing the derived subgroup
// (so the quotient is abelian and every H is normal). Sorted by mask.
std::vector<Subgroup> subgroups_containing(const FiniteGroup& g, const Subgroup& N);

// Every subgroup, found by closure over cyclic subgroups repeatedly
// extended one element at a time. Sorted by mask.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// All unordered pairs (H, K) of normal subgroups with trivial
// intersection and H*K = G, the trivial pair (G, 1) included; each pair
// carries the larger factor first and the list is ordered
// lexicographically by bitset. The second form reuses a precomputed
// subgroup list.
std::vector<std::pair<Subgroup, Subgroup>> direct_decompositions(const FiniteGroup& g);
std::vector<std::pair<Subgroup, Subgroup>> direct_decompositions(
    const FiniteGroup& g, const std::vector<Subgroup>& subgroups);

bool is_abelian(const FiniteGroup& g);

// Renumbers a subgroup as a standalone FiniteGroup. Element 0 is the
// identity; the rest keep their relative order. Generators are chosen
// greedily (smallest element enlarging the span) so canonical words exist.
FiniteGroup materialize_subgroup(const FiniteGroup& g, const Subgroup& H, const std::string& name);

// (p, k) with n = p^k, k >= 0; throws GroupError when n is not a prime
// power. Returns p = 1 only for n = 1.
std::pair<int, int> prime_power_decomposition(int n);

} // namespace ccauto
