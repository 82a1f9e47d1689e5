#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "selfsim/perm.hpp"

namespace selfsim {

// Automaton whose transition table is produced on demand by a deterministic
// generator map over int64 state ids. Evaluations are memoized and counted
// against a budget so runaway recursive definitions fail loudly instead of
// hanging. Safe for concurrent readers.
class LazyAutomaton {
public:
    struct StateDef {
        Permutation perm;
        std::vector<int64_t> child;
    };
    using Generator = std::function<StateDef(int64_t)>;

    static constexpr size_t kDefaultMemoBudget = 1u << 20;

    LazyAutomaton(int m, Generator gen, int64_t identity_id = 0,
                  size_t memo_budget = kDefaultMemoBudget)
        : m_(m), gen_(std::move(gen)), identity_(identity_id), budget_(memo_budget) {}

    int m() const { return m_; }
    int64_t identity_id() const { return identity_; }

    const StateDef& eval(int64_t id) const;

private:
    int m_;
    Generator gen_;
    int64_t identity_;
    size_t budget_;
    mutable std::mutex mu_;
    mutable std::unordered_map<int64_t, std::unique_ptr<StateDef>> memo_;
};

} // namespace selfsim
