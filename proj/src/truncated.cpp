#include "selfsim/truncated.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "selfsim/errors.hpp"

namespace selfsim {

bool TruncatedGroup::contains(const Portrait& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

bool TruncatedGroup::same_elements(const TruncatedGroup& other) const {
    return complete && other.complete && elements == other.elements;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long TruncatedGroup::exponent() const {
    if (!complete) throw ResourceError("exponent needs a fully enumerated group");
    long long e = 1;
    for (const auto& p : elements) e = lcm_ll(e, p.order());
    return e;
}

AmbientSpec AmbientSpec::full(int m, int depth) {
    return AmbientSpec{m, depth, all_permutations(m)};
}

AmbientSpec AmbientSpec::layered(int m, int depth, std::vector<Permutation> allowed) {
    return AmbientSpec{m, depth, std::move(allowed)};
}

uint64_t AmbientSpec::size(uint64_t guard) const {
    uint64_t total = 1;
    const uint64_t base = allowed.size();
    for (size_t v = 0; v < vertices(); ++v) {
        if (total > guard / base + 1) throw SizeError("truncated ambient exceeds the size guard");
        total *= base;
        if (total > guard) throw SizeError("truncated ambient exceeds the size guard");
    }
    return total;
}

Portrait AmbientSpec::decode(uint64_t index) const {
    const size_t nverts = vertices();
    std::vector<Permutation> perms(nverts);
    const uint64_t base = allowed.size();
    for (size_t v = nverts; v-- > 0;) {
        perms[v] = allowed[static_cast<size_t>(index % base)];
        index /= base;
    }
    return Portrait(m, depth, std::move(perms));
}

namespace {

std::vector<Portrait> closure_gens_with_inverses(const std::vector<Portrait>& gens) {
    std::vector<Portrait> out = gens;
    for (const auto& g : gens) {
        Portrait inv = g.inverse();
        if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(std::move(inv));
    }
    return out;
}

TruncatedGroup finish(int m, int depth, const std::vector<Portrait>& gens,
                      std::unordered_set<Portrait, PortraitHash> seen) {
    TruncatedGroup g;
    g.m = m;
    g.depth = depth;
    g.generators = gens;
    g.elements.assign(seen.begin(), seen.end());
    std::sort(g.elements.begin(), g.elements.end());
    g.complete = true;
    return g;
}

} // namespace

TruncatedGroup closure_serial(int m, int depth, const std::vector<Portrait>& gens, size_t guard) {
    auto mult = closure_gens_with_inverses(gens);
    std::unordered_set<Portrait, PortraitHash> seen;
    std::vector<Portrait> frontier;
    Portrait id = Portrait::identity(m, depth);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Portrait> next;
        for (const auto& p : frontier)
            for (const auto& g : mult) {
                Portrait q = p.then(g);
                if (seen.insert(q).second) {
                    if (seen.size() > guard) throw ResourceError("truncated closure exceeds guard");
                    next.push_back(std::move(q));
                }
            }
        frontier = std::move(next);
    }
    return finish(m, depth, gens, std::move(seen));
}

TruncatedGroup closure_parallel(int m, int depth, const std::vector<Portrait>& gens, size_t guard) {
    auto mult = closure_gens_with_inverses(gens);
    std::unordered_set<Portrait, PortraitHash> seen;
    std::vector<Portrait> frontier;
    Portrait id = Portrait::identity(m, depth);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        // products computed in parallel, set insertion stays serial
        std::vector<std::vector<Portrait>> buckets;
        const long long fn = static_cast<long long>(frontier.size());
#ifdef _OPENMP
        int nthreads = omp_get_max_threads();
#else
        int nthreads = 1;
#endif
        buckets.resize(static_cast<size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < fn; ++i) {
#ifdef _OPENMP
            auto& local = buckets[static_cast<size_t>(omp_get_thread_num())];
#else
            auto& local = buckets[0];
#endif
            for (const auto& g : mult) local.push_back(frontier[static_cast<size_t>(i)].then(g));
        }
        std::vector<Portrait> next;
        for (auto& bucket : buckets)
            for (auto& q : bucket)
                if (seen.insert(q).second) {
                    if (seen.size() > guard) throw ResourceError("truncated closure exceeds guard");
                    next.push_back(std::move(q));
                }
        frontier = std::move(next);
    }
    return finish(m, depth, gens, std::move(seen));
}

TruncatedGroup closure(int m, int depth, const std::vector<Portrait>& gens, size_t guard) {
#ifdef _OPENMP
    return closure_parallel(m, depth, gens, guard);
#else
    return closure_serial(m, depth, gens, guard);
#endif
}

namespace {

bool satisfies(const Portrait& c, const std::vector<std::pair<Portrait, Portrait>>& pairs) {
    for (const auto& [x, y] : pairs)
        if (x.then(c) != c.then(y)) return false;
    return true;
}

} // namespace

std::vector<Portrait> intertwiner_scan_serial(const AmbientSpec& ambient,
                                              const std::vector<std::pair<Portrait, Portrait>>& pairs) {
    const uint64_t n = ambient.size();
    std::vector<Portrait> out;
    for (uint64_t i = 0; i < n; ++i) {
        Portrait c = ambient.decode(i);
        if (satisfies(c, pairs)) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Portrait> intertwiner_scan_parallel(const AmbientSpec& ambient,
                                                const std::vector<std::pair<Portrait, Portrait>>& pairs) {
    const uint64_t n = ambient.size();
#ifdef _OPENMP
    int nthreads = omp_get_max_threads();
#else
    int nthreads = 1;
#endif
    std::vector<std::vector<Portrait>> buckets(static_cast<size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4096)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
#ifdef _OPENMP
        auto& local = buckets[static_cast<size_t>(omp_get_thread_num())];
#else
        auto& local = buckets[0];
#endif
        Portrait c = ambient.decode(static_cast<uint64_t>(i));
        if (satisfies(c, pairs)) local.push_back(std::move(c));
    }
    std::vector<Portrait> out;
    for (auto& bucket : buckets)
        for (auto& p : bucket) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Portrait> intertwiner_scan(const AmbientSpec& ambient,
                                       const std::vector<std::pair<Portrait, Portrait>>& pairs) {
#ifdef _OPENMP
    return intertwiner_scan_parallel(ambient, pairs);
#else
    return intertwiner_scan_serial(ambient, pairs);
#endif
}

std::vector<Portrait> portraits_of(const std::vector<Automorphism>& gens, int depth) {
    std::vector<Portrait> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.portrait(depth));
    return out;
}

Automorphism lift_portrait(const Portrait& p) {
    // one automaton state per vertex, identity below the truncation depth
    const int m = p.m();
    std::vector<AutState> states;
    const size_t nverts = Portrait::vertex_count(m, p.depth());
    const uint32_t identity = static_cast<uint32_t>(nverts);
    size_t off = 0, width = 1;
    for (int t = 0; t < p.depth(); ++t) {
        for (size_t i = 0; i < width; ++i) {
            AutState s;
            s.perm = p.perm_at(t, i);
            s.child.reserve(static_cast<size_t>(m));
            for (int y = 0; y < m; ++y) {
                if (t + 1 < p.depth())
                    s.child.push_back(static_cast<uint32_t>(
                        off + width + i * static_cast<size_t>(m) + static_cast<size_t>(y)));
                else
                    s.child.push_back(identity);
            }
            states.push_back(std::move(s));
        }
        off += width;
        width *= static_cast<size_t>(m);
    }
    AutState e;
    e.perm = Permutation(m);
    e.child.assign(static_cast<size_t>(m), identity);
    states.push_back(std::move(e));
    const uint32_t init = (nverts == 0) ? identity : 0;
    auto aut = std::make_shared<Automaton>(m, std::move(states), identity);
    return Automorphism::from_automaton(aut, init);
}

} // namespace selfsim
