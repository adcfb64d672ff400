#pragma once

#include <vector>

#include "ccauto/finite_group.hpp"
#include "ccauto/group_core.hpp"

namespace ccauto {

struct Automorphism {
    std::vector<int> perm;             // element -> image, bijection fixing 0
    std::vector<int> generator_images; // aligned with generator_elements

    bool operator==(const Automorphism& o) const { return perm == o.perm; }
    bool operator<(const Automorphism& o) const { return perm < o.perm; }
};

struct AutomorphismSet {
    std::vector<Automorphism> elements; // sorted by perm
    bool closed = false;                // contains identity, closed under composition/inverse
};

// The conjugation maps x -> c^-1 x c, deduplicated; |result| = |G|/|Z(G)|.
AutomorphismSet inner_automorphisms(const FiniteGroup& g);

// Exhaustive search for the bijective homomorphisms that fix every
// conjugacy class elementwise-up-to-conjugacy: alpha(x) in x^G for EVERY
// element x, not only the generators. Backtracks over generator images
// restricted to the generators' classes, pruning with the group's relators
// as soon as all their generators are assigned, then extends each full
// assignment through canonical words and keeps it only if it is bijective,
// multiplicative on all pairs, and class preserving at every element.
AutomorphismSet class_preserving_automorphisms(const FiniteGroup& g);

// |Aut_c(G)| / |Inn(G)|. Throws GroupError if the inner automorphisms are
// not all found by the class-preserving search (an implementation bug).
int outc_order(const FiniteGroup& g);

struct HomCountReport {
    std::vector<int> source_invariants;
    long long count = 1;
};

// |Hom(A, T)| for A abelian with the given invariant factors and T an
// abelian group: the product over factors p^a of #{t in T : t^(p^a) = 1}.
HomCountReport count_homs(const std::vector<int>& source_invariants, const FiniteGroup& target);

// |Hom(G/gamma_2(G), Z(G))| via the product formula. Requires a purely
// non-abelian group (no nontrivial abelian direct factor); throws
// GroupError otherwise, since the count formula would not equal the
// number of central automorphisms. The second form reuses precomputed
// direct decompositions for the hypothesis check.
long long central_automorphism_count(const FiniteGroup& g);
long long central_automorphism_count(
    const FiniteGroup& g, const std::vector<std::pair<Subgroup, Subgroup>>& decompositions);

// Product over the generator elements of their conjugacy class sizes; an
// upper bound for |Aut_c(G)|.
long long autc_class_bound(const FiniteGroup& g);

} // namespace ccauto
