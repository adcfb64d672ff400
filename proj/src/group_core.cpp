#include "ccauto/group_core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace ccauto {

namespace {

void require_mask_capacity(const FiniteGroup& g) {
    if (g.order() > 64)
        throw GroupError("subgroup operations require order <= 64, got " +
                         std::to_string(g.order()));
}

uint64_t closure_mask(const FiniteGroup& g, uint64_t seed) {
    uint64_t mask = seed | 1; // identity
    std::vector<int> work;
    for (int e = 0; e < g.order(); ++e)
        if ((mask >> e) & 1)
            work.push_back(e);
    // Worklist closure under product and inverse.
    while (!work.empty()) {
        int e = work.back();
        work.pop_back();
        int ie = g.inv(e);
        if (!((mask >> ie) & 1)) {
            mask |= uint64_t{1} << ie;
            work.push_back(ie);
        }
        for (int f = 0; f < g.order(); ++f) {
            if (!((mask >> f) & 1))
                continue;
            int p = g.mul(e, f);
            if (!((mask >> p) & 1)) {
                mask |= uint64_t{1} << p;
                work.push_back(p);
            }
            p = g.mul(f, e);
            if (!((mask >> p) & 1)) {
                mask |= uint64_t{1} << p;
                work.push_back(p);
            }
        }
    }
    return mask;
}

bool mask_closed(const FiniteGroup& g, uint64_t mask) {
    if (!(mask & 1))
        return false;
    for (int a = 0; a < g.order(); ++a) {
        if (!((mask >> a) & 1))
            continue;
        if (!((mask >> g.inv(a)) & 1))
            return false;
        for (int b = 0; b < g.order(); ++b)
            if ((mask >> b) & 1 && !((mask >> g.mul(a, b)) & 1))
                return false;
    }
    return true;
}

} // namespace

Subgroup::Subgroup(const FiniteGroup& parent, uint64_t mask) : parent_(&parent), mask_(mask) {
    require_mask_capacity(parent);
    if (parent.order() < 64)
        mask_ &= (uint64_t{1} << parent.order()) - 1;
    if (!(mask_ & 1))
        throw GroupError("subgroup must contain the identity");
    if (!mask_closed(parent, mask_))
        throw GroupError("subgroup mask not closed under product/inverse");
    if (parent.order() % size() != 0)
        throw GroupError("subgroup size violates Lagrange"); // unreachable for closed sets
}

int Subgroup::size() const {
    return std::popcount(mask_);
}

std::vector<int> Subgroup::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e = 0; e < parent_->order(); ++e)
        if (contains(e))
            out.push_back(e);
    return out;
}

bool Subgroup::is_normal() const {
    const FiniteGroup& g = *parent_;
    for (int c = 0; c < g.order(); ++c)
        for (int e = 0; e < g.order(); ++e)
            if (contains(e) && !contains(g.conjugate(e, c)))
                return false;
    return true;
}

bool Subgroup::is_abelian() const {
    const FiniteGroup& g = *parent_;
    std::vector<int> el = elements();
    for (size_t i = 0; i < el.size(); ++i)
        for (size_t j = i + 1; j < el.size(); ++j)
            if (g.mul(el[i], el[j]) != g.mul(el[j], el[i]))
                return false;
    return true;
}

bool Subgroup::is_whole_group() const {
    return size() == parent_->order();
}

ConjugacyPartition conjugacy_classes(const FiniteGroup& g) {
    ConjugacyPartition part;
    int n = g.order();
    part.class_of.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        if (part.class_of[e] >= 0)
            continue;
        int id = static_cast<int>(part.classes.size());
        std::vector<int> cls;
        for (int c = 0; c < n; ++c) {
            int x = g.conjugate(e, c);
            if (part.class_of[x] < 0) {
                part.class_of[x] = id;
                cls.push_back(x);
            }
        }
        std::sort(cls.begin(), cls.end());
        part.representatives.push_back(cls.front());
        part.classes.push_back(std::move(cls));
    }
    return part;
}

Subgroup centralizer(const FiniteGroup& g, int e) {
    require_mask_capacity(g);
    if (e < 0 || e >= g.order())
        throw GroupError("element index out of range");
    uint64_t mask = 0;
    for (int c = 0; c < g.order(); ++c)
        if (g.mul(c, e) == g.mul(e, c))
            mask |= uint64_t{1} << c;
    return Subgroup(g, mask);
}

Subgroup center(const FiniteGroup& g) {
    require_mask_capacity(g);
    uint64_t mask = 0;
    for (int c = 0; c < g.order(); ++c) {
        bool central = true;
        for (int e = 0; e < g.order() && central; ++e)
            central = g.mul(c, e) == g.mul(e, c);
        if (central)
            mask |= uint64_t{1} << c;
    }
    return Subgroup(g, mask);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    return Subgroup(g, 1);
}

Subgroup whole_group(const FiniteGroup& g) {
    require_mask_capacity(g);
    uint64_t mask = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
    return Subgroup(g, mask);
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const int> seed) {
    require_mask_capacity(g);
    uint64_t mask = 0;
    for (int e : seed) {
        if (e < 0 || e >= g.order())
            throw GroupError("seed element out of range");
        mask |= uint64_t{1} << e;
    }
    return Subgroup(g, closure_mask(g, mask));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& H, const Subgroup& K) {
    uint64_t seed = 0;
    for (int h = 0; h < g.order(); ++h) {
        if (!H.contains(h))
            continue;
        for (int k = 0; k < g.order(); ++k)
            if (K.contains(k))
                seed |= uint64_t{1} << g.commutator(h, k);
    }
    return Subgroup(g, closure_mask(g, seed));
}

CommutatorSet commutator_set(const FiniteGroup& g, int x) {
    if (x < 0 || x >= g.order())
        throw GroupError("element index out of range");
    std::set<int> vals;
    for (int e = 0; e < g.order(); ++e)
        vals.insert(g.commutator(x, e));
    CommutatorSet out;
    out.elements.assign(vals.begin(), vals.end());
    // Closure test on the raw set.
    out.is_subgroup = true;
    for (int a : out.elements) {
        if (!vals.count(g.inv(a))) {
            out.is_subgroup = false;
            break;
        }
        for (int b : out.elements)
            if (!vals.count(g.mul(a, b))) {
                out.is_subgroup = false;
                break;
            }
        if (!out.is_subgroup)
            break;
    }
    return out;
}

Subgroup derived_subgroup(const FiniteGroup& g) {
    Subgroup G = whole_group(g);
    return commutator_subgroup(g, G, G);
}

CentralSeriesReport central_series(const FiniteGroup& g) {
    require_mask_capacity(g);
    CentralSeriesReport rep;
    Subgroup G = whole_group(g);

    rep.lower.push_back(G);
    while (!rep.lower.back().is_trivial()) {
        Subgroup next = commutator_subgroup(g, rep.lower.back(), G);
        if (next.mask() == rep.lower.back().mask())
            throw GroupError("group is not nilpotent: lower central series stabilized at order " +
                             std::to_string(next.size()));
        rep.lower.push_back(next);
    }

    rep.upper.push_back(trivial_subgroup(g));
    while (!rep.upper.back().is_whole_group()) {
        const Subgroup& zi = rep.upper.back();
        uint64_t mask = 0;
        for (int x = 0; x < g.order(); ++x) {
            bool in_next = true;
            for (int y = 0; y < g.order() && in_next; ++y)
                in_next = zi.contains(g.commutator(x, y));
            if (in_next)
                mask |= uint64_t{1} << x;
        }
        if (mask == zi.mask())
            throw GroupError("group is not nilpotent: upper central series stabilized at order " +
                             std::to_string(zi.size()));
        rep.upper.push_back(Subgroup(g, mask));
    }

    rep.nilpotency_class = static_cast<int>(rep.lower.size()) - 1;
    int upper_class = static_cast<int>(rep.upper.size()) - 1;
    if (rep.nilpotency_class != upper_class)
        throw GroupError("central series disagree: lower gives class " +
                         std::to_string(rep.nilpotency_class) + ", upper gives " +
                         std::to_string(upper_class));
    return rep;
}

std::pair<int, int> prime_power_decomposition(int n) {
    if (n < 1)
        throw GroupError("order must be positive");
    if (n == 1)
        return {1, 0};
    int p = 0;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        p = n;
    int k = 0;
    int m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1)
        throw GroupError("order " + std::to_string(n) + " is not a prime power");
    return {p, k};
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
    auto [p, k] = prime_power_decomposition(g.order());
    (void)k;
    uint64_t seed = derived_subgroup(g).mask();
    if (p > 1)
        for (int e = 0; e < g.order(); ++e)
            seed |= uint64_t{1} << g.power(e, p);
    return Subgroup(g, closure_mask(g, seed));
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& N) {
    require_mask_capacity(g);
    if (!N.is_normal())
        throw GroupError("cannot form quotient by a non-normal subgroup");
    int n = g.order();
    // Coset of e = { e*h : h in N }, keyed by least element.
    std::vector<int> coset_min(n, -1);
    for (int e = 0; e < n; ++e) {
        if (coset_min[e] >= 0)
            continue;
        std::vector<int> coset;
        for (int h = 0; h < n; ++h)
            if (N.contains(h))
                coset.push_back(g.mul(e, h));
        int least = *std::min_element(coset.begin(), coset.end());
        for (int x : coset)
            coset_min[x] = least;
    }
    std::vector<int> reps;
    for (int e = 0; e < n; ++e)
        if (coset_min[e] == e)
            reps.push_back(e);
    int q = static_cast<int>(reps.size());
    std::vector<int> index_of(n, -1);
    for (int i = 0; i < q; ++i)
        index_of[reps[i]] = i;

    std::vector<int> projection(n);
    for (int e = 0; e < n; ++e)
        projection[e] = index_of[coset_min[e]];

    std::vector<int> table(static_cast<size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<size_t>(a) * q + b] = projection[g.mul(reps[a], reps[b])];

    std::vector<int> gens;
    for (int ge : g.generator_elements()) {
        int img = projection[ge];
        if (img != FiniteGroup::kIdentity &&
            std::find(gens.begin(), gens.end(), img) == gens.end())
            gens.push_back(img);
    }
    FiniteGroup qg(g.name() + "/" + std::to_string(N.size()), q, std::move(table), std::move(gens));
    return QuotientGroup{std::move(qg), std::move(projection)};
}

std::vector<int> abelian_invariants(const FiniteGroup& g) {
    if (!is_abelian(g))
        throw GroupError("abelian_invariants requires an abelian group");
    auto [p, k] = prime_power_decomposition(g.order());
    if (g.order() == 1)
        return {};
    // c_j = #{x : x^(p^j) = 1} = p^(sum_i min(j, a_i)) determines the
    // partition (a_i) uniquely.
    std::vector<int> dims; // dims[j] = log_p c_j
    long long pj = 1;
    for (int j = 0; j <= k; ++j) {
        int count = 0;
        for (int e = 0; e < g.order(); ++e)
            if (g.power(e, pj) == FiniteGroup::kIdentity)
                ++count;
        int d = 0;
        int c = count;
        while (c > 1) {
            if (c % p != 0)
                throw GroupError("internal: order-dividing count not a power of p");
            c /= p;
            ++d;
        }
        dims.push_back(d);
        pj *= p;
    }
    std::vector<int> conj; // conj[j] = #{i : a_i >= j}, j = 1..k
    for (int j = 1; j <= k; ++j)
        conj.push_back(dims[j] - dims[j - 1]);
    std::vector<int> invariants;
    for (int i = 1; i <= (conj.empty() ? 0 : conj[0]); ++i) {
        int a = 0;
        for (int j = 0; j < static_cast<int>(conj.size()); ++j)
            if (conj[j] >= i)
                a = j + 1;
        long long factor = 1;
        for (int t = 0; t < a; ++t)
            factor *= p;
        invariants.push_back(static_cast<int>(factor));
    }
    std::sort(invariants.rbegin(), invariants.rend());
    long long prod = 1;
    for (int f : invariants)
        prod *= f;
    if (prod != g.order())
        throw GroupError("internal: abelian invariants do not multiply to the group order");
    return invariants;
}

namespace {

// Closure of closed_base u {e}; cheaper than a fresh closure because only
// products involving new elements need scanning.
uint64_t extend_closed(const FiniteGroup& g, uint64_t closed_base, int e) {
    uint64_t mask = closed_base;
    std::vector<int> work;
    if (!((mask >> e) & 1)) {
        mask |= uint64_t{1} << e;
        work.push_back(e);
    }
    while (!work.empty()) {
        int a = work.back();
        work.pop_back();
        int ia = g.inv(a);
        if (!((mask >> ia) & 1)) {
            mask |= uint64_t{1} << ia;
            work.push_back(ia);
        }
        for (int f = 0; f < g.order(); ++f) {
            if (!((mask >> f) & 1))
                continue;
            int p = g.mul(a, f);
            if (!((mask >> p) & 1)) {
                mask |= uint64_t{1} << p;
                work.push_back(p);
            }
            p = g.mul(f, a);
            if (!((mask >> p) & 1)) {
                mask |= uint64_t{1} << p;
                work.push_back(p);
            }
        }
    }
    return mask;
}

} // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    require_mask_capacity(g);
    std::set<uint64_t> seen;
    std::vector<uint64_t> work;
    auto add = [&](uint64_t m) {
        if (seen.insert(m).second)
            work.push_back(m);
    };
    add(1);
    // Extend each known subgroup by one outside element until stable.
    for (size_t i = 0; i < work.size(); ++i) {
        uint64_t base = work[i];
        for (int e = 1; e < g.order(); ++e) {
            if ((base >> e) & 1)
                continue;
            add(extend_closed(g, base, e));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (uint64_t m : seen)
        out.push_back(Subgroup(g, m));
    return out;
}

std::vector<Subgroup> subgroups_containing(const FiniteGroup& g, const Subgroup& N) {
    Subgroup gamma2 = derived_subgroup(g);
    if ((gamma2.mask() & ~N.mask()) != 0)
        throw GroupError("subgroups_containing requires N to contain the derived subgroup");
    QuotientGroup q = quotient_group(g, N);
    std::vector<Subgroup> quotient_subgroups = all_subgroups(q.group);
    std::vector<Subgroup> out;
    out.reserve(quotient_subgroups.size());
    for (const Subgroup& s : quotient_subgroups) {
        uint64_t mask = 0;
        for (int e = 0; e < g.order(); ++e)
            if (s.contains(q.projection[e]))
                mask |= uint64_t{1} << e;
        out.push_back(Subgroup(g, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Subgroup, Subgroup>> direct_decompositions(const FiniteGroup& g) {
    return direct_decompositions(g, all_subgroups(g));
}

std::vector<std::pair<Subgroup, Subgroup>> direct_decompositions(
    const FiniteGroup& g, const std::vector<Subgroup>& subs) {
    std::vector<Subgroup> normal;
    for (const Subgroup& s : subs)
        if (s.is_normal())
            normal.push_back(s);
    std::vector<std::pair<Subgroup, Subgroup>> out;
    int n = g.order();
    for (size_t i = 0; i < normal.size(); ++i) {
        for (size_t j = i; j < normal.size(); ++j) {
            const Subgroup& a = normal[i];
            const Subgroup& b = normal[j];
            if ((a.mask() & b.mask()) != 1)
                continue;
            if (a.size() * b.size() != n)
                continue;
            // Normality and trivial intersection force [H,K] = 1, but the
            // elementwise check is cheap and keeps the contract explicit.
            bool commute = true;
            for (int x = 0; x < n && commute; ++x) {
                if (!a.contains(x))
                    continue;
                for (int y = 0; y < n && commute; ++y)
                    if (b.contains(y))
                        commute = g.mul(x, y) == g.mul(y, x);
            }
            if (!commute)
                continue;
            if (a.size() >= b.size())
                out.emplace_back(a, b);
            else
                out.emplace_back(b, a);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        if (p.first.mask() != q.first.mask())
            return p.first.mask() < q.first.mask();
        return p.second.mask() < q.second.mask();
    });
    return out;
}

bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a))
                return false;
    return true;
}

FiniteGroup materialize_subgroup(const FiniteGroup& g, const Subgroup& H, const std::string& name) {
    std::vector<int> el = H.elements(); // ascending; identity (0) first
    int m = static_cast<int>(el.size());
    std::vector<int> index_of(g.order(), -1);
    for (int i = 0; i < m; ++i)
        index_of[el[i]] = i;
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[static_cast<size_t>(a) * m + b] = index_of[g.mul(el[a], el[b])];
    // Greedy generating set: repeatedly adjoin the least element outside
    // the running span.
    std::vector<int> gens;
    uint64_t span = 1;
    for (int i = 1; i < m; ++i) {
        if ((span >> el[i]) & 1)
            continue;
        gens.push_back(i);
        uint64_t seed = span | (uint64_t{1} << el[i]);
        span = closure_mask(g, seed);
    }
    return FiniteGroup(name, m, std::move(table), std::move(gens));
}

} // namespace ccauto
