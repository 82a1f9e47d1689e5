#pragma once

#include <optional>
#include <vector>

#include "selfsim/truncated.hpp"

namespace selfsim {

// Find all truncated c with x c = c y (mod Stab(depth)) for every pair
// (x, y). Centralizers are the diagonal case x = y; conjugacy searches use a
// single pair. Per-vertex candidates come from `allowed`; the root can be
// restricted further (rigid lifts fix it outright).
struct IntertwinerProblem {
    int m = 0;
    int depth = 0;
    std::vector<std::pair<Portrait, Portrait>> pairs;
    std::vector<Permutation> allowed;         // empty means all of Sym(m)
    std::vector<Permutation> root_candidates; // empty means same as allowed
};

inline constexpr size_t kSolutionGuard = 1u << 21;
inline constexpr size_t kSearchBudget = 40'000'000;

struct LevelwiseResult {
    TruncatedGroup group; // complete=false when the guard stopped enumeration
};

// Level-by-level enumeration: the unknown permutations of each level split
// into orbits under the pair actions; one representative per orbit is free,
// the rest are forced along the chain. Root branches may run in parallel.
LevelwiseResult solve_all(const IntertwinerProblem& problem, size_t guard = kSolutionGuard,
                          bool parallel = true);

// Deterministic depth-first search for one solution; nullopt certifies that
// no solution exists at this depth. Throws ResourceError past the budget.
std::optional<Portrait> solve_first(const IntertwinerProblem& problem,
                                    size_t budget = kSearchBudget);

// centralizer of the given elements in the truncated ambient, by exhaustive
// scan (oracle) and by the levelwise solver
TruncatedGroup centralizer_brute(const std::vector<Automorphism>& xs, int depth,
                                 const std::vector<Permutation>& allowed = {});
TruncatedGroup centralizer_levelwise(const std::vector<Automorphism>& xs, int depth,
                                     const std::vector<Permutation>& allowed = {},
                                     size_t guard = kSolutionGuard);

// g with x^g = y mod Stab(depth); nullopt means certified absence at depth
std::optional<Automorphism> find_conjugator(const Automorphism& x, const Automorphism& y,
                                            int depth, size_t budget = kSearchBudget);

// conjugator of a^xi back to a (also usable as a conjugacy tester between
// powers); xi is typically a unit modulo the exponent of the activity group
std::optional<Automorphism> conjugator_unit_power(const Automorphism& a, long long xi,
                                                  int depth, size_t budget = kSearchBudget);

} // namespace selfsim
