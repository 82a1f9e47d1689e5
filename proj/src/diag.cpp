#include "selfsim/diag.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

bool comparable(const std::vector<int>& u, const std::vector<int>& v) {
    const size_t n = std::min(u.size(), v.size());
    for (size_t i = 0; i < n; ++i)
        if (u[i] != v[i]) return false;
    return true;
}

bool activity_preserves(const Automorphism& a, const OrbitPartition& part) {
    const Permutation& p = a.root_perm();
    for (const auto& orbit : part.orbits)
        for (int y : orbit)
            if (part.orbit_of(p(y)) != part.orbit_of(y)) return false;
    return true;
}

// group vertices by first letter and build the placement tree recursively
Automorphism place(const Automorphism& a, int m, const std::vector<std::vector<int>>& vs) {
    if (vs.empty()) return Automorphism::identity(m);
    if (vs.size() == 1 && vs.front().empty()) return a;
    std::map<int, std::vector<std::vector<int>>> by_head;
    for (const auto& v : vs) {
        if (v.empty()) throw InputError("comparable vertices in placement set");
        by_head[v.front()].emplace_back(v.begin() + 1, v.end());
    }
    std::vector<Automorphism> sections(static_cast<size_t>(m), Automorphism::identity(m));
    for (auto& [head, tails] : by_head)
        sections[static_cast<size_t>(head)] = place(a, m, tails);
    return Automorphism::wreath(Permutation(m), std::move(sections));
}

} // namespace

bool ConnectingSet::pairwise_incomparable() const {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (comparable(vertices[i], vertices[j])) return false;
    return true;
}

bool ConnectingSet::connects_to_depth(int m, int depth) const {
    // walk the tree: a vertex is covered if comparable to some member
    std::vector<std::vector<int>> frontier = {{}};
    for (int t = 0; t <= depth; ++t) {
        std::vector<std::vector<int>> next;
        for (const auto& u : frontier) {
            bool covered = false;
            for (const auto& v : vertices)
                if (comparable(u, v)) { covered = true; break; }
            if (!covered) return false;
            bool is_prefix_of_member = false;
            for (const auto& v : vertices)
                if (v.size() > u.size() && comparable(u, v)) is_prefix_of_member = true;
            if (is_prefix_of_member && t < depth)
                for (int y = 0; y < m; ++y) {
                    auto w = u;
                    w.push_back(y);
                    next.push_back(std::move(w));
                }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return true;
}

Automorphism delta_vertex(const Automorphism& a, const std::vector<int>& w) {
    return place(a, a.m(), {w});
}

Automorphism delta_set(const Automorphism& a, const std::vector<std::vector<int>>& n) {
    ConnectingSet cs{n};
    if (!cs.pairwise_incomparable())
        throw InputError("placement set has comparable vertices");
    return place(a, a.m(), n);
}

MonoSum::MonoSum(std::vector<std::vector<int>> vs) : vertices(std::move(vs)) {
    ConnectingSet cs{vertices};
    if (!cs.pairwise_incomparable())
        throw InputError("sum of vertex monomorphisms needs incomparable vertices");
}

Automorphism MonoSum::apply(const Automorphism& a) const {
    return delta_set(a, vertices);
}

bool MonoSum::injective_at_depth(const std::vector<Automorphism>& samples, int depth) const {
    std::set<Portrait> images;
    for (const auto& s : samples)
        if (!images.insert(apply(s).portrait(depth)).second) return false;
    return true;
}

Automorphism x_i(const Automorphism& a, const OrbitPartition& part, int i) {
    if (a.m() != part.m) throw InputError("alphabet mismatch");
    if (i < 0 || i >= part.size()) throw InputError("orbit index out of range");
    if (!activity_preserves(a, part))
        throw InputError("partial diagonal applied to an element not preserving the orbit partition");
    std::vector<Automorphism> sections(static_cast<size_t>(part.m), Automorphism::identity(part.m));
    for (int y : part.orbits[static_cast<size_t>(i)]) sections[static_cast<size_t>(y)] = a;
    return Automorphism::wreath(Permutation(part.m), std::move(sections));
}

Automorphism apply_delta_word(const Automorphism& a, const OrbitPartition& part, const DeltaWord& w) {
    Automorphism cur = a;
    for (int i : w) cur = x_i(cur, part, i);
    return cur;
}

Automorphism conj_action(const Automorphism& b, const Automorphism& r) {
    return b.conjugate(r);
}

FactorDecomposition factor(const Automorphism& a, const OrbitPartition& part) {
    if (a.m() != part.m) throw InputError("alphabet mismatch");
    if (!activity_preserves(a, part))
        throw InputError("factor decomposition needs an orbit-preserving activity");
    FactorDecomposition out;
    const Permutation& sigma = a.root_perm();
    for (const auto& orbit : part.orbits) {
        std::vector<int> img(static_cast<size_t>(part.m));
        for (int y = 0; y < part.m; ++y) img[static_cast<size_t>(y)] = y;
        std::vector<Automorphism> sections(static_cast<size_t>(part.m),
                                           Automorphism::identity(part.m));
        for (int y : orbit) {
            img[static_cast<size_t>(y)] = sigma(y);
            sections[static_cast<size_t>(y)] = a.section(y);
        }
        out.factors.push_back(
            Automorphism::wreath(Permutation::from_images(img), std::move(sections)));
    }
    return out;
}

std::vector<Automorphism> b_group(const std::vector<Automorphism>& gens, const OrbitPartition& part) {
    std::vector<Automorphism> out;
    for (const auto& g : gens)
        for (auto& f : factor(g, part).factors) out.push_back(std::move(f));
    return out;
}

std::vector<DeltaClosureEntry> delta_closure_entries(const std::vector<Automorphism>& gens,
                                                     const OrbitPartition& part, int max_len) {
    if (max_len < 0) throw InputError("closure length must be nonnegative");
    std::vector<DeltaClosureEntry> out;
    std::vector<DeltaWord> words = {{}};
    for (int len = 0; len <= max_len; ++len) {
        for (const auto& w : words)
            for (size_t gi = 0; gi < gens.size(); ++gi)
                out.push_back({gi, w, apply_delta_word(gens[gi], part, w)});
        if (len == max_len) break;
        std::vector<DeltaWord> next;
        next.reserve(words.size() * static_cast<size_t>(part.size()));
        for (const auto& w : words)
            for (int i = 0; i < part.size(); ++i) {
                DeltaWord w2 = w;
                w2.push_back(i);
                next.push_back(std::move(w2));
            }
        words = std::move(next);
    }
    return out;
}

std::vector<Automorphism> delta_closure(const std::vector<Automorphism>& gens,
                                        const OrbitPartition& part, int max_len) {
    std::vector<Automorphism> out;
    for (auto& e : delta_closure_entries(gens, part, max_len)) out.push_back(std::move(e.value));
    return out;
}

PermGroup activity_group(const std::vector<Automorphism>& gens) {
    if (gens.empty()) throw InputError("empty generator list");
    std::vector<Permutation> roots;
    roots.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.m() != gens.front().m()) throw InputError("alphabet mismatch in generator list");
        roots.push_back(g.root_perm());
    }
    return PermGroup(gens.front().m(), std::move(roots));
}

OrbitPartition activity_orbits(const std::vector<Automorphism>& gens) {
    return orbits(activity_group(gens));
}

} // namespace selfsim
