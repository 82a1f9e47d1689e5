#pragma once

#include <vector>

#include "selfsim/automorphism.hpp"
#include "selfsim/permgroup.hpp"

namespace selfsim {

// Vertex-word list in which distinct members are incomparable and every
// vertex up to `depth` is comparable to some member.
struct ConnectingSet {
    std::vector<std::vector<int>> vertices;
    bool pairwise_incomparable() const;
    bool connects_to_depth(int m, int depth) const;
};

// Word over the partial diagonal generators x_1..x_s, stored as 0-based
// orbit indices. Applied left to right: a^{uv} = (a^u)^v.
using DeltaWord = std::vector<int>;

// place a at the single vertex w (trivial permutations above, identity off w)
Automorphism delta_vertex(const Automorphism& a, const std::vector<int>& w);

// place a at every vertex of the pairwise-incomparable set n
Automorphism delta_set(const Automorphism& a, const std::vector<std::vector<int>>& n);

// Sum of vertex monomorphisms delta_u over a pairwise-incomparable set:
// applies each placement and multiplies (the placements commute).
struct MonoSum {
    std::vector<std::vector<int>> vertices;
    explicit MonoSum(std::vector<std::vector<int>> vs);
    Automorphism apply(const Automorphism& a) const;
    // distinct portraits on distinct sample inputs certify injectivity at depth
    bool injective_at_depth(const std::vector<Automorphism>& samples, int depth) const;
};

// partial diagonal x_i: copies a into every slot of orbit O_(i).
// Rejects a whose activity does not preserve the partition orbits.
Automorphism x_i(const Automorphism& a, const OrbitPartition& part, int i);

Automorphism apply_delta_word(const Automorphism& a, const OrbitPartition& part, const DeltaWord& w);

// the conjugation operator (r)kappa applied to b
Automorphism conj_action(const Automorphism& b, const Automorphism& r);

// a = a_[1] ... a_[s] with a_[i] supported on orbit O_(i)
struct FactorDecomposition {
    std::vector<Automorphism> factors;
};
FactorDecomposition factor(const Automorphism& a, const OrbitPartition& part);

// generators of B(G): all factors of all generators
std::vector<Automorphism> b_group(const std::vector<Automorphism>& gens, const OrbitPartition& part);

// { g^w : g in gens, w a Delta-word of length <= max_len }, in (length, word,
// generator) order
std::vector<Automorphism> delta_closure(const std::vector<Automorphism>& gens,
                                        const OrbitPartition& part, int max_len);

// same, also reporting which (generator, word) produced each element
struct DeltaClosureEntry {
    size_t gen_index;
    DeltaWord word;
    Automorphism value;
};
std::vector<DeltaClosureEntry> delta_closure_entries(const std::vector<Automorphism>& gens,
                                                     const OrbitPartition& part, int max_len);

// activity group of a generator list and its orbit partition
PermGroup activity_group(const std::vector<Automorphism>& gens);
OrbitPartition activity_orbits(const std::vector<Automorphism>& gens);

} // namespace selfsim
