#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/perm.hpp"

namespace selfsim {

struct AutState {
    Permutation perm;
    std::vector<uint32_t> child; // child[y] for each letter y
    std::string name;            // optional; filled by parse/serialize
};

// Finite Mealy-style automaton over {1..m}: every state carries a permutation
// of the alphabet and m child states. One distinguished state is the identity
// (trivial permutation, all children itself).
class Automaton {
public:
    Automaton(int m, std::vector<AutState> states, uint32_t identity_index);

    int m() const { return m_; }
    size_t size() const { return states_.size(); }
    const AutState& state(uint32_t i) const { return states_[i]; }
    uint32_t identity_index() const { return identity_; }

    // bisimilarity class of every state (Moore partition refinement);
    // classes are numbered by first occurrence
    std::vector<uint32_t> bisim_classes() const;

    // quotient by bisimilarity over all states
    Automaton minimized() const;

    bool states_bisimilar(uint32_t a, uint32_t b) const;

private:
    int m_ = 0;
    std::vector<AutState> states_;
    uint32_t identity_ = 0;
};

// Bisimilarity of states across two automata over the same alphabet.
bool bisimilar(const Automaton& a, uint32_t qa, const Automaton& b, uint32_t qb);

} // namespace selfsim
