#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/perm.hpp"

namespace selfsim {

// Depth-d truncation of a tree automorphism: one permutation per vertex of
// depth < d, stored in breadth-first order. Portraits are exactly the
// elements of Aut(T_m) mod Stab(d).
class Portrait {
public:
    Portrait() = default;
    Portrait(int m, int depth, std::vector<Permutation> perms);

    static Portrait identity(int m, int depth);

    int m() const { return m_; }
    int depth() const { return depth_; }

    // number of vertices of depth < d
    static size_t vertex_count(int m, int depth);
    // index of the first vertex of the given level in BFS order
    static size_t level_offset(int m, int level);

    const Permutation& perm_at(int level, size_t idx) const;
    const Permutation& perm_at(const std::vector<int>& vertex) const;

    // image of a level-t vertex (t <= depth), as a BFS index within its level
    size_t apply(int level, size_t idx) const;
    std::vector<int> apply(const std::vector<int>& word) const;

    Portrait then(const Portrait& other) const; // this first, then other
    Portrait inverse() const;

    bool is_identity() const;
    int order(int guard = 1 << 20) const;

    bool commutes_with(const Portrait& other) const {
        return then(other) == other.then(*this);
    }

    bool operator==(const Portrait&) const = default;
    auto operator<=>(const Portrait&) const = default;

    size_t hash() const;
    std::string to_string() const; // one line per level, cycle notation

private:
    int m_ = 0;
    int depth_ = 0;
    std::vector<Permutation> perms_;
};

struct PortraitHash {
    size_t operator()(const Portrait& p) const { return p.hash(); }
};

} // namespace selfsim
