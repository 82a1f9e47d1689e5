#pragma once

#include "selfsim/diag.hpp"
#include "selfsim/verify.hpp"

namespace selfsim {

// Symbolic generator families of orbit-type (m,1) on the (m+1)-ary tree,
// with index rules that recurse strictly downward, so every generator is
// individually finite-state.
//
//   InfiniteRank:    alpha_1 = (e,...,e,alpha_1,e)(1 2 ... m),
//                    alpha_{2i-1} = alpha_i^{x_1} (i >= 2),
//                    alpha_{2i}   = alpha_i^{x_2} (i >= 1)
//   FiniteExtension: beta_1 as alpha_1,
//                    beta_i = (beta_i,...,beta_i,beta_{i-1}) (i >= 2)
enum class FamilyVariant { InfiniteRank, FiniteExtension };

class IndexMapFamily {
public:
    IndexMapFamily(int m, FamilyVariant variant,
                   size_t memo_budget = LazyAutomaton::kDefaultMemoBudget);

    int m() const { return m_; }
    int alphabet() const { return m_ + 1; }
    FamilyVariant variant() const { return variant_; }
    OrbitPartition partition() const; // {1..m} and {m+1}

    Automorphism realize(long long index) const;

private:
    int m_;
    FamilyVariant variant_;
    std::shared_ptr<LazyAutomaton> aut_;
};

IndexMapFamily theorem_c_family(int m, FamilyVariant variant);

// structural closure of the family under x_1 and x_2 up to the index bound
Report delta_invariance_check(const IndexMapFamily& f, long long bound);

// no nontrivial product alpha_1^{c_1} ... alpha_r^{c_r} with |c_i| <= bound
// vanishes at the given depth
Report independence_check(const IndexMapFamily& f, int rank, int coeff_bound, int depth);

} // namespace selfsim
