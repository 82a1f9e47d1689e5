#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "selfsim/automaton.hpp"
#include "selfsim/lazy.hpp"
#include "selfsim/portrait.hpp"

namespace selfsim {

namespace detail {
class Node;
using NodePtr = std::shared_ptr<const Node>;
} // namespace detail

// A tree automorphism, held as a handle into a lazily unfolded wreath
// recursion. Leaves are states of finite or lazy automata; products,
// inverses and explicit one-level wreath elements stay symbolic, with
// sections computed on demand and memoized. Values are immutable and cheap
// to copy.
class Automorphism {
public:
    Automorphism() = default;

    static Automorphism identity(int m);
    static Automorphism from_automaton(std::shared_ptr<const Automaton> a, uint32_t init);
    static Automorphism from_lazy(std::shared_ptr<const LazyAutomaton> a, int64_t init);
    // explicit one-level element (s_1,...,s_m)sigma
    static Automorphism wreath(const Permutation& root, std::vector<Automorphism> sections);

    bool valid() const { return node_ != nullptr; }
    int m() const;
    const Permutation& root_perm() const;

    Automorphism section(int letter) const;
    Automorphism section(const std::vector<int>& word) const;

    // right action on a vertex word
    std::vector<int> act(const std::vector<int>& word) const;

    // this first, then other
    Automorphism then(const Automorphism& other) const;
    Automorphism inverse() const;
    Automorphism pow(long long n) const;
    // r^{-1} * this * r
    Automorphism conjugate(const Automorphism& r) const;

    Portrait portrait(int depth) const;
    bool is_trivial_at_depth(int depth) const; // early exit
    bool equal_at_depth(const Automorphism& other, int depth) const;

    static constexpr size_t kDefaultStateBound = 100000;

    // reachable finite automaton; throws ResourceError past the bound
    struct Extracted {
        std::shared_ptr<const Automaton> automaton;
        uint32_t init = 0;
    };
    Extracted to_automaton(size_t state_bound = kDefaultStateBound) const;

    // minimized, canonically numbered by breadth-first reachability from the
    // initial state; the identity state is appended when unreachable
    Extracted canonical(size_t state_bound = kDefaultStateBound) const;

    // bisimulation equality of finite-state automorphisms
    bool equal(const Automorphism& other, size_t state_bound = kDefaultStateBound) const;

    // bisimulation-distinct sections at all vertices (including this one)
    size_t state_count(size_t state_bound = kDefaultStateBound) const;
    std::vector<Automorphism> states(size_t state_bound = kDefaultStateBound) const;

    const detail::NodePtr& node() const { return node_; }
    explicit Automorphism(detail::NodePtr node) : node_(std::move(node)) {}

private:
    detail::NodePtr node_;
};

inline Automorphism operator*(const Automorphism& a, const Automorphism& b) { return a.then(b); }

// commutator a^{-1} b^{-1} a b
Automorphism commutator(const Automorphism& a, const Automorphism& b);

bool commute_at_depth(const Automorphism& a, const Automorphism& b, int depth);

} // namespace selfsim
