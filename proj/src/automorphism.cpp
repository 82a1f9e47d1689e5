#include "selfsim/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "selfsim/errors.hpp"

namespace selfsim {
namespace detail {

class Node {
public:
    Node(int m, Permutation root) : m_(m), root_(std::move(root)), memo_(static_cast<size_t>(m)) {}
    virtual ~Node() = default;

    int m() const { return m_; }
    const Permutation& root() const { return root_; }
    virtual bool surely_identity() const { return false; }

    NodePtr section(int y) const {
        std::lock_guard<std::mutex> lock(mu_);
        NodePtr& slot = memo_[static_cast<size_t>(y)];
        if (!slot) slot = compute_section(y);
        return slot;
    }

protected:
    virtual NodePtr compute_section(int y) const = 0;

private:
    int m_;
    Permutation root_;
    mutable std::mutex mu_;
    mutable std::vector<NodePtr> memo_;
};

namespace {

struct FiniteCache {
    std::mutex mu;
    std::vector<std::weak_ptr<const Node>> nodes;
};

class FiniteNode : public Node {
public:
    FiniteNode(std::shared_ptr<const Automaton> aut, std::shared_ptr<FiniteCache> cache,
               uint32_t state)
        : Node(aut->m(), aut->state(state).perm),
          aut_(std::move(aut)), cache_(std::move(cache)), state_(state) {}

    static NodePtr get(const std::shared_ptr<const Automaton>& aut,
                       const std::shared_ptr<FiniteCache>& cache, uint32_t state) {
        std::lock_guard<std::mutex> lock(cache->mu);
        if (cache->nodes.size() < aut->size()) cache->nodes.resize(aut->size());
        if (NodePtr hit = cache->nodes[state].lock()) return hit;
        NodePtr fresh = std::make_shared<FiniteNode>(aut, cache, state);
        cache->nodes[state] = fresh;
        return fresh;
    }

    bool surely_identity() const override { return state_ == aut_->identity_index(); }

protected:
    NodePtr compute_section(int y) const override {
        return get(aut_, cache_, aut_->state(state_).child[static_cast<size_t>(y)]);
    }

private:
    std::shared_ptr<const Automaton> aut_;
    std::shared_ptr<FiniteCache> cache_;
    uint32_t state_;
};

struct LazyCache {
    std::mutex mu;
    std::unordered_map<int64_t, std::weak_ptr<const Node>> nodes;
};

class LazyNode : public Node {
public:
    LazyNode(std::shared_ptr<const LazyAutomaton> aut, std::shared_ptr<LazyCache> cache, int64_t id)
        : Node(aut->m(), aut->eval(id).perm), aut_(std::move(aut)), cache_(std::move(cache)), id_(id) {}

    static NodePtr get(const std::shared_ptr<const LazyAutomaton>& aut,
                       const std::shared_ptr<LazyCache>& cache, int64_t id) {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->nodes.find(id);
        if (it != cache->nodes.end())
            if (NodePtr hit = it->second.lock()) return hit;
        NodePtr fresh = std::make_shared<LazyNode>(aut, cache, id);
        cache->nodes[id] = fresh;
        return fresh;
    }

    bool surely_identity() const override { return id_ == aut_->identity_id(); }

protected:
    NodePtr compute_section(int y) const override {
        return get(aut_, cache_, aut_->eval(id_).child[static_cast<size_t>(y)]);
    }

private:
    std::shared_ptr<const LazyAutomaton> aut_;
    std::shared_ptr<LazyCache> cache_;
    int64_t id_;
};

NodePtr make_product(NodePtr a, NodePtr b);
NodePtr make_inverse(NodePtr a);

class ProductNode : public Node {
public:
    ProductNode(NodePtr a, NodePtr b)
        : Node(a->m(), a->root().then(b->root())), a_(std::move(a)), b_(std::move(b)) {}

protected:
    NodePtr compute_section(int y) const override {
        return make_product(a_->section(y), b_->section(a_->root()(y)));
    }

private:
    NodePtr a_, b_;
};

class InverseNode : public Node {
public:
    explicit InverseNode(NodePtr a) : Node(a->m(), a->root().inverse()), a_(std::move(a)) {}

protected:
    NodePtr compute_section(int y) const override {
        return make_inverse(a_->section(root()(y)));
    }

private:
    NodePtr a_;
};

class WreathNode : public Node {
public:
    WreathNode(Permutation root, std::vector<NodePtr> sections, bool identity)
        : Node(static_cast<int>(sections.size()), std::move(root)),
          sections_(std::move(sections)), identity_(identity) {}

    bool surely_identity() const override { return identity_; }

protected:
    NodePtr compute_section(int y) const override { return sections_[static_cast<size_t>(y)]; }

private:
    std::vector<NodePtr> sections_;
    bool identity_;
};

NodePtr make_product(NodePtr a, NodePtr b) {
    if (a->surely_identity()) return b;
    if (b->surely_identity()) return a;
    return std::make_shared<ProductNode>(std::move(a), std::move(b));
}

NodePtr make_inverse(NodePtr a) {
    if (a->surely_identity()) return a;
    return std::make_shared<InverseNode>(std::move(a));
}

std::shared_ptr<const Automaton> identity_automaton(int m) {
    AutState s;
    s.perm = Permutation(m);
    s.child.assign(static_cast<size_t>(m), 0);
    s.name = "e";
    return std::make_shared<Automaton>(m, std::vector<AutState>{s}, 0);
}

} // namespace
} // namespace detail

using detail::Node;
using detail::NodePtr;

Automorphism Automorphism::identity(int m) {
    return from_automaton(detail::identity_automaton(m), 0);
}

Automorphism Automorphism::from_automaton(std::shared_ptr<const Automaton> a, uint32_t init) {
    if (init >= a->size()) throw InputError("initial state out of range");
    auto cache = std::make_shared<detail::FiniteCache>();
    return Automorphism(detail::FiniteNode::get(a, cache, init));
}

Automorphism Automorphism::from_lazy(std::shared_ptr<const LazyAutomaton> a, int64_t init) {
    auto cache = std::make_shared<detail::LazyCache>();
    return Automorphism(detail::LazyNode::get(a, cache, init));
}

Automorphism Automorphism::wreath(const Permutation& root, std::vector<Automorphism> sections) {
    if (static_cast<int>(sections.size()) != root.degree())
        throw InputError("wreath element needs one section per letter");
    std::vector<NodePtr> nodes;
    nodes.reserve(sections.size());
    bool ident = root.is_identity();
    for (const auto& s : sections) {
        if (!s.valid() || s.m() != root.degree())
            throw InputError("wreath section alphabet mismatch");
        ident = ident && s.node()->surely_identity();
        nodes.push_back(s.node());
    }
    return Automorphism(std::make_shared<detail::WreathNode>(root, std::move(nodes), ident));
}

int Automorphism::m() const { return node_->m(); }

const Permutation& Automorphism::root_perm() const { return node_->root(); }

Automorphism Automorphism::section(int letter) const {
    if (letter < 0 || letter >= m()) throw InputError("letter out of range");
    return Automorphism(node_->section(letter));
}

Automorphism Automorphism::section(const std::vector<int>& word) const {
    NodePtr cur = node_;
    for (int y : word) {
        if (y < 0 || y >= cur->m()) throw InputError("letter out of range");
        cur = cur->section(y);
    }
    return Automorphism(cur);
}

std::vector<int> Automorphism::act(const std::vector<int>& word) const {
    std::vector<int> out;
    out.reserve(word.size());
    NodePtr cur = node_;
    for (int y : word) {
        if (y < 0 || y >= cur->m()) throw InputError("letter out of range");
        out.push_back(cur->root()(y));
        cur = cur->section(y);
    }
    return out;
}

Automorphism Automorphism::then(const Automorphism& other) const {
    if (m() != other.m()) throw InputError("alphabet mismatch in product");
    return Automorphism(detail::make_product(node_, other.node_));
}

Automorphism Automorphism::inverse() const { return Automorphism(detail::make_inverse(node_)); }

Automorphism Automorphism::pow(long long n) const {
    if (n == 0) return identity(m());
    Automorphism base = n > 0 ? *this : inverse();
    unsigned long long e = n > 0 ? static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(-(n + 1)) + 1ull;
    Automorphism acc;
    Automorphism sq = base;
    for (;;) {
        if (e & 1ull) acc = acc.valid() ? acc.then(sq) : sq;
        e >>= 1ull;
        if (e == 0) break;
        sq = sq.then(sq);
    }
    return acc;
}

Automorphism Automorphism::conjugate(const Automorphism& r) const {
    return r.inverse().then(*this).then(r);
}

Portrait Automorphism::portrait(int depth) const {
    std::vector<Permutation> perms;
    perms.reserve(Portrait::vertex_count(m(), depth));
    std::vector<NodePtr> level = {node_};
    for (int t = 0; t < depth; ++t) {
        std::vector<NodePtr> next;
        if (t + 1 < depth) next.reserve(level.size() * static_cast<size_t>(m()));
        for (const auto& n : level) {
            perms.push_back(n->root());
            if (t + 1 < depth)
                for (int y = 0; y < m(); ++y) next.push_back(n->section(y));
        }
        level = std::move(next);
    }
    return Portrait(m(), depth, std::move(perms));
}

bool Automorphism::is_trivial_at_depth(int depth) const {
    std::vector<NodePtr> level = {node_};
    for (int t = 0; t < depth; ++t) {
        std::vector<NodePtr> next;
        for (const auto& n : level) {
            if (n->surely_identity()) continue;
            if (!n->root().is_identity()) return false;
            if (t + 1 < depth)
                for (int y = 0; y < m(); ++y) next.push_back(n->section(y));
        }
        level = std::move(next);
    }
    return true;
}

bool Automorphism::equal_at_depth(const Automorphism& other, int depth) const {
    if (m() != other.m()) return false;
    std::vector<std::pair<NodePtr, NodePtr>> level = {{node_, other.node_}};
    for (int t = 0; t < depth; ++t) {
        std::vector<std::pair<NodePtr, NodePtr>> next;
        for (const auto& [a, b] : level) {
            if (a == b) continue;
            if (a->root() != b->root()) return false;
            if (t + 1 < depth)
                for (int y = 0; y < m(); ++y) next.emplace_back(a->section(y), b->section(y));
        }
        level = std::move(next);
    }
    return true;
}

Automorphism::Extracted Automorphism::to_automaton(size_t state_bound) const {
    std::map<const Node*, uint32_t> index;
    std::vector<NodePtr> order;
    std::deque<NodePtr> queue;
    auto visit = [&](const NodePtr& n) -> uint32_t {
        auto it = index.find(n.get());
        if (it != index.end()) return it->second;
        if (order.size() >= state_bound) throw ResourceError("state explosion in automaton extraction");
        uint32_t id = static_cast<uint32_t>(order.size());
        index.emplace(n.get(), id);
        order.push_back(n);
        queue.push_back(n);
        return id;
    };
    visit(node_);
    std::vector<std::vector<uint32_t>> children;
    while (!queue.empty()) {
        NodePtr n = queue.front();
        queue.pop_front();
        std::vector<uint32_t> ch;
        ch.reserve(static_cast<size_t>(m()));
        for (int y = 0; y < m(); ++y) ch.push_back(visit(n->section(y)));
        children.push_back(std::move(ch));
    }
    std::vector<AutState> states(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        states[i].perm = order[i]->root();
        states[i].child = children[i];
    }
    // locate or append a proper identity state
    uint32_t identity = UINT32_MAX;
    for (size_t i = 0; i < states.size() && identity == UINT32_MAX; ++i) {
        if (!states[i].perm.is_identity()) continue;
        bool self = true;
        for (uint32_t c : states[i].child)
            if (c != i) { self = false; break; }
        if (self) identity = static_cast<uint32_t>(i);
    }
    if (identity == UINT32_MAX) {
        identity = static_cast<uint32_t>(states.size());
        AutState e;
        e.perm = Permutation(m());
        e.child.assign(static_cast<size_t>(m()), identity);
        states.push_back(std::move(e));
    }
    Extracted out;
    out.automaton = std::make_shared<Automaton>(m(), std::move(states), identity);
    out.init = 0;
    return out;
}

Automorphism::Extracted Automorphism::canonical(size_t state_bound) const {
    Extracted raw = to_automaton(state_bound);
    Automaton min = raw.automaton->minimized();
    uint32_t init = raw.automaton->bisim_classes()[raw.init];
    // breadth-first renumbering from the initial state, children in letter order
    std::vector<uint32_t> number(min.size(), UINT32_MAX);
    std::vector<uint32_t> order;
    std::deque<uint32_t> queue;
    number[init] = 0;
    order.push_back(init);
    queue.push_back(init);
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t c : min.state(q).child) {
            if (number[c] != UINT32_MAX) continue;
            number[c] = static_cast<uint32_t>(order.size());
            order.push_back(c);
            queue.push_back(c);
        }
    }
    uint32_t identity = min.identity_index();
    if (number[identity] == UINT32_MAX) {
        number[identity] = static_cast<uint32_t>(order.size());
        order.push_back(identity);
    }
    std::vector<AutState> states(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
        const AutState& src = min.state(order[i]);
        AutState s;
        s.perm = src.perm;
        s.child.reserve(src.child.size());
        for (uint32_t c : src.child) s.child.push_back(number[c]);
        s.name = (order[i] == identity) ? "e" : ("q" + std::to_string(i));
        states[i] = std::move(s);
    }
    Extracted out;
    out.automaton = std::make_shared<Automaton>(m(), std::move(states), number[identity]);
    out.init = 0;
    return out;
}

bool Automorphism::equal(const Automorphism& other, size_t state_bound) const {
    if (m() != other.m()) return false;
    Extracted a = to_automaton(state_bound);
    Extracted b = other.to_automaton(state_bound);
    return bisimilar(*a.automaton, a.init, *b.automaton, b.init);
}

size_t Automorphism::state_count(size_t state_bound) const {
    return states(state_bound).size();
}

std::vector<Automorphism> Automorphism::states(size_t state_bound) const {
    Extracted c = canonical(state_bound);
    // reachable-from-init states of the canonical form; the appended identity
    // (when unreachable) is excluded since it is not a section of this element
    std::vector<bool> reach(c.automaton->size(), false);
    std::deque<uint32_t> queue = {c.init};
    reach[c.init] = true;
    while (!queue.empty()) {
        uint32_t q = queue.front();
        queue.pop_front();
        for (uint32_t ch : c.automaton->state(q).child)
            if (!reach[ch]) {
                reach[ch] = true;
                queue.push_back(ch);
            }
    }
    std::vector<Automorphism> out;
    for (uint32_t i = 0; i < c.automaton->size(); ++i)
        if (reach[i]) out.push_back(from_automaton(c.automaton, i));
    return out;
}

Automorphism commutator(const Automorphism& a, const Automorphism& b) {
    return a.inverse().then(b.inverse()).then(a).then(b);
}

bool commute_at_depth(const Automorphism& a, const Automorphism& b, int depth) {
    return a.then(b).equal_at_depth(b.then(a), depth);
}

} // namespace selfsim
