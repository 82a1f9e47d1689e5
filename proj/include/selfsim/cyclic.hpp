#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/diag.hpp"
#include "selfsim/solver.hpp"

namespace selfsim {

// Cyclic self-similar machine a = (a^{e_1},...,a^{e_m}) sigma, realized as a
// lazy automaton whose states are the powers of a. Sections of a^j are again
// powers, with exponents summed along the sigma-orbit of the letter.
class CyclicMachine {
public:
    CyclicMachine(Permutation sigma, std::vector<long long> exps,
                  size_t memo_budget = LazyAutomaton::kDefaultMemoBudget);

    int m() const { return sigma_.degree(); }
    const Permutation& sigma() const { return sigma_; }
    const std::vector<long long>& exps() const { return exps_; }

    Automorphism element() const { return power(1); }
    Automorphism power(long long j) const;
    long long section_exponent(long long j, int letter) const;

private:
    Permutation sigma_;
    std::vector<long long> exps_;
    std::shared_ptr<LazyAutomaton> aut_;
};

// m-adding machine of multiplicity s on the alphabet of size m*s: s parallel
// odometer blocks
Automorphism multi_adding_machine(int m, int s);
Automorphism adding_machine(int m);

// Stab_{C(A)}(1) component on one orbit: the free section lives at the
// representative letter and must centralize a^{constraint_exponent}; the
// sections at the other letters follow the conjugate chain.
struct ChainComponent {
    int orbit = 0;
    std::vector<int> cycle;                   // letters in activity order from the minimum
    std::vector<long long> chain_exponents;   // prefix sums i_{k1}, i_{k1}+i_{k2}, ...
    long long constraint_exponent = 0;        // j_k
};

struct CentralizerDescription {
    OrbitPartition partition;
    int depth = 0;
    std::vector<ChainComponent> stab1_components;
    std::vector<Automorphism> b_part;
    std::vector<Permutation> s_candidates; // nontrivial rigid permutations tried
    std::vector<Automorphism> rigid_part;  // verified lifts, aligned with found candidates
    std::vector<Permutation> rigid_roots;  // root permutations of the lifts

    // build the Stab(1) element determined by one free section per component
    Automorphism instantiate(const Automorphism& a,
                             const std::vector<Automorphism>& free_sections) const;
};

// The centralizer procedure for cyclic self-similar groups: solves the
// level-one commutation relations into per-orbit conjugate chains and
// searches for rigid lifts at the given depth.
CentralizerDescription cyclic_centralizer(const Automorphism& a, const OrbitPartition& part,
                                          int depth, long long power_bound = 16);

// right normal form of a to the given depth: returns (g, b) with b = a^g,
// where every activity cycle of b carries identity sections except its last
// letter, recursively
std::pair<Automorphism, Automorphism> normal_form_conjugator(const Automorphism& a, int depth);

bool in_right_normal_form(const Automorphism& a, int depth);

// exponent e with section equal to a^e at the probe depth; nullopt if none
// within the bound
std::optional<long long> match_power(const Automorphism& section, const Automorphism& a,
                                     long long bound, int probe_depth);

// ----- Centralizers of cyclic subgroups of Aut(T_4), by orbit-type -----

enum class T4Case { EvenEven, OddOdd, Mixed, ConjugatePair, NotConjugate, StabOnly };

struct T4Report {
    std::string orbit_type;
    std::vector<long long> exps;
    int depth = 0;
    T4Case verdict = T4Case::StabOnly;
    std::string case_label;
    CentralizerDescription description;
    std::optional<Automorphism> rigid; // explicit r when the case provides one
    bool rigid_commutes = false;
    bool square_trivial = false;      // orbit-type (2,2) case (i): a^2 = e
    bool tester_absent = false;       // non-conjugacy certified by the search
    std::vector<std::string> lines;
    bool pass = true;
};

// orbit_type is one of {2,2}, {2,1,1}, {3,1}
T4Report t4_analysis(const std::vector<int>& orbit_type, const std::vector<long long>& exps,
                     int depth = 3);

} // namespace selfsim
