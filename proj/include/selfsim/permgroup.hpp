#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "selfsim/perm.hpp"

namespace selfsim {

// Ordered list of orbits of a subgroup of Sym(m). Orbits are sorted
// internally and ordered by minimal element, which fixes the orbit-type
// (m_1,...,m_s) and the numbering used by every per-orbit construction.
struct OrbitPartition {
    int m = 0;
    std::vector<std::vector<int>> orbits; // 0-based letters, each sorted

    int size() const { return static_cast<int>(orbits.size()); }
    std::vector<int> orbit_type() const {
        std::vector<int> t;
        t.reserve(orbits.size());
        for (const auto& o : orbits) t.push_back(static_cast<int>(o.size()));
        return t;
    }
    // orbit index containing letter y, 0-based
    int orbit_of(int y) const;
    bool operator==(const OrbitPartition&) const = default;
};

// Subgroup of Sym(m) given by generators. Element enumeration is by closure
// and memoized; it refuses m > 12 and caps the element count.
class PermGroup {
public:
    PermGroup() : cache_(std::make_shared<Cache>()) {}
    PermGroup(int m, std::vector<Permutation> generators);

    int degree() const { return m_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    const std::vector<Permutation>& elements() const; // sorted, memoized
    size_t order() const { return elements().size(); }
    bool contains(const Permutation& p) const;
    bool is_abelian() const;
    bool is_transitive() const;
    bool is_trivial() const;

    static constexpr size_t kElementGuard = 4u << 20;

private:
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Permutation>> elems;
    };
    int m_ = 0;
    std::vector<Permutation> gens_;
    std::shared_ptr<Cache> cache_; // copies share the enumeration
};

OrbitPartition orbits(const PermGroup& p);

// Projections P_(i) of P on its orbits; P embeds in their direct product.
std::vector<PermGroup> permutation_type(const PermGroup& p, const OrbitPartition& part);

// True iff the group is a sub-direct product that is actually the full
// direct product of its orbit projections.
bool is_subdirect_proper(const PermGroup& p, const OrbitPartition& part);

// xi permutes the orbits of the partition and preserves the order of the
// letters inside each orbit.
bool is_rigid(const Permutation& xi, const OrbitPartition& part);

// Group of all rigid permutations for the partition, generated by the
// order-preserving swaps of adjacent equal-size orbits.
PermGroup rigid_group(const OrbitPartition& part);

// Exact centralizer of Q in Sym(m). Uses per-orbit centralizers plus
// orbit-intertwining swaps when the orbit sizes stay within the brute guard;
// falls back to a full Sym(m) scan for small m.
PermGroup centralizer_sym(const PermGroup& q);

// Brute-force oracle: scans all of Sym(m). Guarded at m <= 12.
PermGroup centralizer_sym_brute(const PermGroup& q);

// Relabeling p such that conjugating by p lays the orbits out as consecutive
// blocks {1..m_1},{m_1+1..},... in orbit order.
Permutation block_relabeling(const OrbitPartition& part);

} // namespace selfsim
