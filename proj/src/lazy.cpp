#include "selfsim/lazy.hpp"

#include "selfsim/errors.hpp"

namespace selfsim {

const LazyAutomaton::StateDef& LazyAutomaton::eval(int64_t id) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(id);
    if (it != memo_.end()) return *it->second;
    if (memo_.size() >= budget_)
        throw ResourceError("lazy automaton memo budget exceeded");
    StateDef def = gen_(id);
    if (def.perm.degree() != m_ || static_cast<int>(def.child.size()) != m_)
        throw InputError("lazy automaton generator produced malformed state");
    if (id == identity_) {
        if (!def.perm.is_identity())
            throw InputError("lazy automaton identity state has nontrivial permutation");
        for (int64_t c : def.child)
            if (c != identity_) throw InputError("lazy automaton identity state must fix itself");
    }
    auto [pos, fresh] = memo_.emplace(id, std::make_unique<StateDef>(std::move(def)));
    return *pos->second;
}

} // namespace selfsim
