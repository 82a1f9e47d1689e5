#include "selfsim/dot.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

std::string render(const Automaton& aut, const std::vector<uint32_t>& inits,
                   const std::vector<std::string>& names) {
    // breadth-first order over the union of everything reachable from inits
    std::vector<long long> number(aut.size(), -1);
    std::vector<uint32_t> order;
    std::deque<uint32_t> queue;
    for (uint32_t q : inits)
        if (number[q] < 0) {
            number[q] = static_cast<long long>(order.size());
            order.push_back(q);
            queue.push_back(q);
        }
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t c : aut.state(q).child)
            if (number[c] < 0) {
                number[c] = static_cast<long long>(order.size());
                order.push_back(c);
                queue.push_back(c);
            }
    }
    std::vector<std::string> label(order.size());
    for (size_t i = 0; i < inits.size(); ++i)
        if (label[static_cast<size_t>(number[inits[i]])].empty())
            label[static_cast<size_t>(number[inits[i]])] = names[i];
    size_t fresh = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        if (!label[i].empty()) continue;
        label[i] = (order[i] == aut.identity_index()) ? "e" : ("q" + std::to_string(fresh++));
    }
    std::ostringstream os;
    os << "digraph automaton {\n  rankdir=LR;\n";
    for (size_t i = 0; i < order.size(); ++i)
        os << "  n" << i << " [label=\"" << label[i] << "\"];\n";
    for (size_t i = 0; i < order.size(); ++i) {
        const AutState& s = aut.state(order[i]);
        std::map<long long, std::string> merged; // target -> comma list, in letter order
        for (int y = 0; y < aut.m(); ++y) {
            long long target = number[s.child[static_cast<size_t>(y)]];
            std::ostringstream lab;
            lab << (y + 1) << '|' << (s.perm(y) + 1);
            auto [it, freshEdge] = merged.try_emplace(target, lab.str());
            if (!freshEdge) it->second += "," + lab.str();
        }
        for (const auto& [target, lab] : merged)
            os << "  n" << i << " -> n" << target << " [label=\"" << lab << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string export_dot(const Automorphism& a, size_t state_bound) {
    auto c = a.canonical(state_bound);
    return render(*c.automaton, {c.init}, {c.automaton->state(c.init).name});
}

std::string export_dot(const std::vector<Automorphism>& generators,
                       const std::vector<std::string>& names, size_t state_bound) {
    if (generators.empty()) throw InputError("empty generator list");
    if (names.size() != generators.size()) throw InputError("one name per generator required");
    // disjoint union of the extracted automata, then one shared minimization
    std::vector<AutState> states;
    std::vector<uint32_t> inits;
    uint32_t offset = 0;
    uint32_t identity = 0;
    const int m = generators.front().m();
    for (const auto& g : generators) {
        if (g.m() != m) throw InputError("alphabet mismatch in generator list");
        auto ext = g.to_automaton(state_bound);
        for (uint32_t i = 0; i < ext.automaton->size(); ++i) {
            AutState s = ext.automaton->state(i);
            for (auto& c : s.child) c += offset;
            states.push_back(std::move(s));
        }
        inits.push_back(offset + ext.init);
        identity = offset + ext.automaton->identity_index();
        offset += static_cast<uint32_t>(ext.automaton->size());
    }
    Automaton combined(m, std::move(states), identity);
    auto cls = combined.bisim_classes();
    Automaton min = combined.minimized();
    std::vector<uint32_t> min_inits;
    for (uint32_t q : inits) min_inits.push_back(cls[q]);
    return render(min, min_inits, names);
}

} // namespace selfsim
