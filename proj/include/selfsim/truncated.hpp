#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "selfsim/automorphism.hpp"
#include "selfsim/portrait.hpp"

namespace selfsim {

// Subgroup of the depth-k truncated tree automorphism group, held as an
// enumerated element set when complete, otherwise as generators only.
struct TruncatedGroup {
    int m = 0;
    int depth = 0;
    std::vector<Portrait> generators;
    std::vector<Portrait> elements; // sorted when complete
    bool complete = true;

    size_t order() const { return elements.size(); }
    bool contains(const Portrait& p) const;
    bool same_elements(const TruncatedGroup& other) const;
    long long exponent() const; // lcm of element orders; needs completeness
};

// The ambient truncated group with per-vertex permutations drawn from a
// fixed allowed list (all of Sym(m) by default, or a layer-closure guard).
// Elements are indexed in mixed radix over the vertices in BFS order.
struct AmbientSpec {
    int m = 0;
    int depth = 0;
    std::vector<Permutation> allowed;

    static AmbientSpec full(int m, int depth);
    static AmbientSpec layered(int m, int depth, std::vector<Permutation> allowed);

    size_t vertices() const { return Portrait::vertex_count(m, depth); }
    // throws SizeError if the count does not fit the guard
    uint64_t size(uint64_t guard = kAmbientGuard) const;
    Portrait decode(uint64_t index) const;

    static constexpr uint64_t kAmbientGuard = 10'000'000;
};

inline constexpr size_t kClosureGuard = 4u << 20;

// closure of the generated subgroup in the truncated ambient; `guard` caps
// the element count
TruncatedGroup closure_serial(int m, int depth, const std::vector<Portrait>& gens,
                              size_t guard = kClosureGuard);
TruncatedGroup closure_parallel(int m, int depth, const std::vector<Portrait>& gens,
                                size_t guard = kClosureGuard);
TruncatedGroup closure(int m, int depth, const std::vector<Portrait>& gens,
                       size_t guard = kClosureGuard);

// all ambient elements c with x c = c y for every pair (x, y)
std::vector<Portrait> intertwiner_scan_serial(const AmbientSpec& ambient,
                                              const std::vector<std::pair<Portrait, Portrait>>& pairs);
std::vector<Portrait> intertwiner_scan_parallel(const AmbientSpec& ambient,
                                                const std::vector<std::pair<Portrait, Portrait>>& pairs);
std::vector<Portrait> intertwiner_scan(const AmbientSpec& ambient,
                                       const std::vector<std::pair<Portrait, Portrait>>& pairs);

// helpers shared by solvers and reports
std::vector<Portrait> portraits_of(const std::vector<Automorphism>& gens, int depth);
Automorphism lift_portrait(const Portrait& p);
long long lcm_ll(long long a, long long b);

} // namespace selfsim
