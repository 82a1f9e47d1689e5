#include "selfsim/automaton.hpp"

#include <algorithm>
#include <map>

#include "selfsim/errors.hpp"

namespace selfsim {

Automaton::Automaton(int m, std::vector<AutState> states, uint32_t identity_index)
    : m_(m), states_(std::move(states)), identity_(identity_index) {
    if (m_ < 1) throw InputError("alphabet size must be at least 1");
    if (identity_ >= states_.size()) throw InputError("identity state out of range");
    for (const auto& s : states_) {
        if (s.perm.degree() != m_) throw InputError("state permutation degree mismatch");
        if (static_cast<int>(s.child.size()) != m_) throw InputError("state child count mismatch");
        for (uint32_t c : s.child)
            if (c >= states_.size()) throw InputError("child state out of range");
    }
    const AutState& e = states_[identity_];
    if (!e.perm.is_identity()) throw InputError("identity state must carry the trivial permutation");
    for (uint32_t c : e.child)
        if (c != identity_) throw InputError("identity state must be a fixed point of the transition map");
}

std::vector<uint32_t> Automaton::bisim_classes() const {
    const size_t n = states_.size();
    std::vector<uint32_t> cls(n);
    {
        std::map<Permutation, uint32_t> first;
        for (size_t i = 0; i < n; ++i) {
            auto [it, fresh] = first.try_emplace(states_[i].perm, static_cast<uint32_t>(first.size()));
            cls[i] = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> first;
        std::vector<uint32_t> next(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<uint32_t> sig;
            sig.reserve(states_[i].child.size() + 1);
            sig.push_back(cls[i]);
            for (uint32_t c : states_[i].child) sig.push_back(cls[c]);
            auto [it, fresh] = first.try_emplace(std::move(sig), static_cast<uint32_t>(first.size()));
            next[i] = it->second;
        }
        if (next == cls) break;
        cls = std::move(next);
    }
    // renumber classes by first occurrence for determinism
    std::vector<uint32_t> renum(n, UINT32_MAX);
    uint32_t fresh = 0;
    for (size_t i = 0; i < n; ++i) {
        if (renum[cls[i]] == UINT32_MAX) renum[cls[i]] = fresh++;
        cls[i] = renum[cls[i]];
    }
    return cls;
}

Automaton Automaton::minimized() const {
    std::vector<uint32_t> cls = bisim_classes();
    uint32_t ncls = 0;
    for (uint32_t c : cls) ncls = std::max(ncls, c + 1);
    std::vector<AutState> out(ncls);
    std::vector<bool> done(ncls, false);
    for (size_t i = 0; i < states_.size(); ++i) {
        uint32_t c = cls[i];
        if (done[c]) continue;
        done[c] = true;
        AutState s;
        s.perm = states_[i].perm;
        s.child.reserve(states_[i].child.size());
        for (uint32_t ch : states_[i].child) s.child.push_back(cls[ch]);
        s.name = states_[i].name;
        out[c] = std::move(s);
    }
    return Automaton(m_, std::move(out), cls[identity_]);
}

bool Automaton::states_bisimilar(uint32_t a, uint32_t b) const {
    auto cls = bisim_classes();
    return cls[a] == cls[b];
}

bool bisimilar(const Automaton& a, uint32_t qa, const Automaton& b, uint32_t qb) {
    if (a.m() != b.m()) return false;
    // disjoint union, then refine
    std::vector<AutState> states;
    states.reserve(a.size() + b.size());
    for (uint32_t i = 0; i < a.size(); ++i) states.push_back(a.state(i));
    const uint32_t off = static_cast<uint32_t>(a.size());
    for (uint32_t i = 0; i < b.size(); ++i) {
        AutState s = b.state(i);
        for (auto& c : s.child) c += off;
        states.push_back(std::move(s));
    }
    Automaton u(a.m(), std::move(states), a.identity_index());
    auto cls = u.bisim_classes();
    return cls[qa] == cls[off + qb];
}

} // namespace selfsim
