#pragma once

#include <string>
#include <vector>

#include "selfsim/automorphism.hpp"

namespace selfsim {

// Line-oriented automaton text format:
//   m 2
//   state a perm 2 1 to e a
//   init a
// Permutations are 1-based image lists or cycle notation; the identity state
// is named `e` and may be omitted. parse(serialize(x)) is state-isomorphic to
// the canonical minimized automaton of x.
std::string serialize_automorphism(const Automorphism& a,
                                   size_t state_bound = Automorphism::kDefaultStateBound);

Automorphism parse_automorphism(const std::string& text);
Automorphism load_automorphism(const std::string& path);

// vertex words: "2 1 2" (1-based letters)
std::vector<int> parse_vertex_word(const std::string& text, int m);
std::string format_vertex_word(const std::vector<int>& word);

} // namespace selfsim
