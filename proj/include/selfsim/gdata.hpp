#pragma once

#include <string>
#include <vector>

#include "selfsim/automorphism.hpp"
#include "selfsim/errors.hpp"
#include "selfsim/lattice.hpp"

namespace selfsim {

// Self-similarity data for a free abelian group Z^n: finite-index subgroups
// H_i with virtual endomorphisms f_i : H_i -> Z^n and coset transversals, one
// block per orbit. The induced representation acts on the m = sum m_i cosets.
struct GDataSpec {
    int n = 0;
    std::vector<int> block_sizes;               // m_i
    std::vector<Lattice> subgroups;             // H_i
    std::vector<VirtualEndo> maps;              // f_i with domain H_i
    std::vector<std::vector<IntVec>> transversals;

    int s() const { return static_cast<int>(block_sizes.size()); }
    int m() const;
    void validate() const; // throws InputError on any inconsistency

    // canonical coset representatives: Hermite digit vectors in lex order
    static std::vector<IntVec> default_transversal(const Lattice& h);
    // representative of v modulo h within the given transversal
    static size_t reduce_to(const Lattice& h, const std::vector<IntVec>& transversal,
                            const IntVec& v);
};

enum class CoreVerdict { Trivial, Nontrivial, Unknown };

struct FCoreResult {
    CoreVerdict verdict = CoreVerdict::Unknown;
    Lattice core;       // meaningful for Nontrivial; last iterate otherwise
    int iterations = 0;
    std::string detail;
};

// Largest subgroup of the intersection of the H_i invariant under every f_i,
// computed by preimage iteration. A non-stabilizing chain whose first
// elementary divisor grows monotonically past the bound certifies triviality
// (every vector of the limit is divisible by arbitrarily large integers);
// otherwise the verdict is Unknown.
FCoreResult f_core(const GDataSpec& d, Int index_bound = Int(1'000'000'000), int max_iter = 256);

Tri is_recurrent(const GDataSpec& d);
Tri is_strongly_recurrent(const GDataSpec& d);

// phi(e_1), ..., phi(e_n) of the induced self-similar representation, as lazy
// automorphisms over the coset alphabet
std::vector<Automorphism> induced_representation(const GDataSpec& d,
                                                 size_t memo_budget = LazyAutomaton::kDefaultMemoBudget);
Automorphism induced_element(const GDataSpec& d, const IntVec& g,
                             size_t memo_budget = LazyAutomaton::kDefaultMemoBudget);

// text format: rank / per-orbit blocks with H rows, f rows (p/q entries) and
// optional transversal rows
GDataSpec parse_gdata(const std::string& text);
std::string serialize_gdata(const GDataSpec& d);
GDataSpec load_gdata(const std::string& path);

} // namespace selfsim
