#pragma once

#include <string>
#include <vector>

#include "selfsim/automorphism.hpp"

namespace selfsim {

// Graphviz diagram of the minimized automaton: one node per state, one edge
// per (state, letter) with "in|out" labels, parallel edges merged into comma
// lists. Deterministic node order.
std::string export_dot(const Automorphism& a,
                       size_t state_bound = Automorphism::kDefaultStateBound);
std::string export_dot(const std::vector<Automorphism>& generators,
                       const std::vector<std::string>& names,
                       size_t state_bound = Automorphism::kDefaultStateBound);

} // namespace selfsim
