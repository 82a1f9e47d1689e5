#include "selfsim/solver.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

struct Prepared {
    int m = 0;
    int depth = 0;
    size_t npairs = 0;
    // per pair: portrait of x and y, and the level-wise vertex images under x
    std::vector<Portrait> x, y;
    std::vector<std::vector<std::vector<size_t>>> img_x; // [pair][level][idx]
    std::vector<Permutation> allowed;
    std::vector<Permutation> roots;
};

std::vector<std::vector<size_t>> level_images(const Portrait& p) {
    std::vector<std::vector<size_t>> img(static_cast<size_t>(p.depth()) + 1);
    img[0] = {0};
    for (int t = 0; t < p.depth(); ++t) {
        const auto& cur = img[static_cast<size_t>(t)];
        auto& next = img[static_cast<size_t>(t) + 1];
        next.resize(cur.size() * static_cast<size_t>(p.m()));
        for (size_t i = 0; i < cur.size(); ++i) {
            const Permutation& q = p.perm_at(t, i);
            for (int yy = 0; yy < p.m(); ++yy)
                next[i * static_cast<size_t>(p.m()) + static_cast<size_t>(yy)] =
                    cur[i] * static_cast<size_t>(p.m()) + static_cast<size_t>(q(yy));
        }
    }
    return img;
}

Prepared prepare(const IntertwinerProblem& problem) {
    Prepared prep;
    prep.m = problem.m;
    prep.depth = problem.depth;
    prep.npairs = problem.pairs.size();
    for (const auto& [x, y] : problem.pairs) {
        if (x.m() != problem.m || x.depth() != problem.depth || y.m() != problem.m ||
            y.depth() != problem.depth)
            throw InputError("intertwiner pair portraits have wrong shape");
        prep.x.push_back(x);
        prep.y.push_back(y);
        prep.img_x.push_back(level_images(x));
    }
    prep.allowed = problem.allowed.empty() ? all_permutations(problem.m) : problem.allowed;
    prep.roots = problem.root_candidates.empty() ? prep.allowed : problem.root_candidates;
    return prep;
}

// The per-level subproblem: unknown permutations at the level-t vertices,
// linked by P(u^x) = perm_x(u)^{-1} P(u) perm_y(u^c).
class Search {
public:
    Search(const Prepared& prep, size_t guard, size_t budget)
        : prep_(prep), guard_(guard), budget_(budget) {
        chosen_.resize(static_cast<size_t>(prep.depth));
        img_c_.resize(static_cast<size_t>(prep.depth) + 1);
        img_c_[0] = {0};
        size_t width = 1;
        for (int t = 0; t < prep.depth; ++t) {
            chosen_[static_cast<size_t>(t)].assign(width, Permutation(prep.m));
            width *= static_cast<size_t>(prep.m);
            img_c_[static_cast<size_t>(t) + 1].assign(width, 0);
        }
    }

    // fix the root permutation and explore everything below it
    void run(const Permutation& root, std::vector<Portrait>& out, bool& complete, bool find_first) {
        find_first_ = find_first;
        out_ = &out;
        complete_ = &complete;
        if (prep_.depth == 0) {
            emit();
            return;
        }
        if (!root_ok(root)) return;
        chosen_[0][0] = root;
        update_images(0);
        descend(1);
    }

    bool stopped() const { return stop_; }

private:
    const Prepared& prep_;
    size_t guard_, budget_;
    size_t nodes_ = 0;
    bool find_first_ = false;
    bool stop_ = false;
    std::vector<Portrait>* out_ = nullptr;
    bool* complete_ = nullptr;
    std::vector<std::vector<Permutation>> chosen_;
    std::vector<std::vector<size_t>> img_c_;

    bool root_ok(const Permutation& root) {
        for (size_t p = 0; p < prep_.npairs; ++p) {
            const Permutation& sx = prep_.x[p].perm_at(0, 0);
            const Permutation& sy = prep_.y[p].perm_at(0, 0);
            if (sx.then(root) != root.then(sy)) return false;
        }
        return true;
    }

    void update_images(int t) {
        const auto& cur = img_c_[static_cast<size_t>(t)];
        auto& next = img_c_[static_cast<size_t>(t) + 1];
        for (size_t i = 0; i < cur.size(); ++i) {
            const Permutation& q = chosen_[static_cast<size_t>(t)][i];
            for (int yy = 0; yy < prep_.m; ++yy)
                next[i * static_cast<size_t>(prep_.m) + static_cast<size_t>(yy)] =
                    cur[i] * static_cast<size_t>(prep_.m) + static_cast<size_t>(q(yy));
        }
    }

    void emit() {
        std::vector<Permutation> flat;
        flat.reserve(Portrait::vertex_count(prep_.m, prep_.depth));
        for (const auto& level : chosen_)
            for (const auto& p : level) flat.push_back(p);
        out_->emplace_back(prep_.m, prep_.depth, std::move(flat));
        if (find_first_) stop_ = true;
        if (!find_first_ && out_->size() > guard_) {
            *complete_ = false;
            stop_ = true;
        }
    }

    void descend(int t) {
        if (stop_) return;
        if (t == prep_.depth) {
            emit();
            return;
        }
        const size_t width = img_c_[static_cast<size_t>(t)].size();
        // orbits of the level-t vertices under the pair actions
        std::vector<size_t> parent(width);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](size_t v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (size_t p = 0; p < prep_.npairs; ++p)
            for (size_t u = 0; u < width; ++u) {
                size_t a = find(u), b = find(prep_.img_x[p][static_cast<size_t>(t)][u]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::vector<std::vector<size_t>> comps;
        {
            std::vector<long long> comp_of(width, -1);
            for (size_t u = 0; u < width; ++u) {
                size_t r = find(u);
                if (comp_of[r] < 0) {
                    comp_of[r] = static_cast<long long>(comps.size());
                    comps.emplace_back();
                }
                comps[static_cast<size_t>(comp_of[r])].push_back(u);
            }
        }
        // per-component consistent assignments
        std::vector<std::vector<std::vector<Permutation>>> sols(comps.size());
        for (size_t ci = 0; ci < comps.size(); ++ci) {
            for (const Permutation& cand : prep_.allowed) {
                if (++nodes_ > budget_) throw ResourceError("levelwise search budget exceeded");
                auto assignment = propagate(t, comps[ci], cand);
                if (assignment) sols[ci].push_back(std::move(*assignment));
            }
            if (sols[ci].empty()) return; // dead branch
        }
        // Cartesian product over components
        std::vector<size_t> pick(comps.size(), 0);
        for (;;) {
            for (size_t ci = 0; ci < comps.size(); ++ci)
                for (size_t k = 0; k < comps[ci].size(); ++k)
                    chosen_[static_cast<size_t>(t)][comps[ci][k]] = sols[ci][pick[ci]][k];
            update_images(t);
            descend(t + 1);
            if (stop_) return;
            size_t ci = comps.size();
            while (ci > 0) {
                --ci;
                if (++pick[ci] < sols[ci].size()) break;
                pick[ci] = 0;
                if (ci == 0) return;
            }
        }
    }

    // assign `cand` to the minimal vertex of the component and push it along
    // the chain; returns the full component assignment or nullopt on clash.
    // Each pair acts on the level by a permutation, so forward arrows alone
    // make the component strongly connected.
    std::optional<std::vector<Permutation>> propagate(int t, const std::vector<size_t>& comp,
                                                      const Permutation& cand) {
        const auto& img_c = img_c_[static_cast<size_t>(t)];
        // map vertex -> position in comp (comp is sorted ascending)
        auto pos_of = [&](size_t v) {
            return static_cast<size_t>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
        };
        std::vector<std::optional<Permutation>> val(comp.size());
        val[0] = cand;
        std::vector<size_t> stack = {0};
        while (!stack.empty()) {
            size_t k = stack.back();
            stack.pop_back();
            size_t u = comp[k];
            for (size_t p = 0; p < prep_.npairs; ++p) {
                size_t v = prep_.img_x[p][static_cast<size_t>(t)][u];
                const Permutation& a = prep_.x[p].perm_at(t, u);
                const Permutation& b = prep_.y[p].perm_at(t, img_c[u]);
                Permutation forced = a.inverse().then(*val[k]).then(b);
                size_t kv = pos_of(v);
                if (!val[kv]) {
                    val[kv] = std::move(forced);
                    stack.push_back(kv);
                } else if (*val[kv] != forced) {
                    return std::nullopt;
                }
            }
        }
        std::vector<Permutation> out;
        out.reserve(comp.size());
        for (auto& v : val) {
            if (!v) throw std::logic_error("level component not covered by pair actions");
            out.push_back(std::move(*v));
        }
        // verify candidates stay inside the allowed alphabet
        if (prep_.allowed.size() != static_cast<size_t>(factorial_cache(prep_.m))) {
            for (const auto& p : out)
                if (std::find(prep_.allowed.begin(), prep_.allowed.end(), p) == prep_.allowed.end())
                    return std::nullopt;
        }
        return out;
    }

    static long long factorial_cache(int m) {
        long long f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    }
};

} // namespace

LevelwiseResult solve_all(const IntertwinerProblem& problem, size_t guard, bool parallel) {
    Prepared prep = prepare(problem);
    LevelwiseResult result;
    result.group.m = problem.m;
    result.group.depth = problem.depth;
    result.group.complete = true;
    if (prep.depth == 0) {
        result.group.elements = {Portrait::identity(problem.m, 0)};
        return result;
    }
    const long long nroots = static_cast<long long>(prep.roots.size());
    std::vector<std::vector<Portrait>> buckets(static_cast<size_t>(nroots));
    std::vector<uint8_t> complete(static_cast<size_t>(nroots), 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < nroots; ++i) {
        Search search(prep, guard, kSearchBudget * 8);
        bool comp = true;
        search.run(prep.roots[static_cast<size_t>(i)], buckets[static_cast<size_t>(i)], comp, false);
        complete[static_cast<size_t>(i)] = comp ? 1 : 0;
    }
    for (size_t i = 0; i < buckets.size(); ++i) {
        if (!complete[i]) result.group.complete = false;
        for (auto& p : buckets[i]) result.group.elements.push_back(std::move(p));
    }
    std::sort(result.group.elements.begin(), result.group.elements.end());
    result.group.elements.erase(
        std::unique(result.group.elements.begin(), result.group.elements.end()),
        result.group.elements.end());
    return result;
}

std::optional<Portrait> solve_first(const IntertwinerProblem& problem, size_t budget) {
    Prepared prep = prepare(problem);
    if (prep.depth == 0) return Portrait::identity(problem.m, 0);
    std::vector<Portrait> out;
    bool complete = true;
    for (const auto& root : prep.roots) {
        Search search(prep, 1, budget);
        search.run(root, out, complete, true);
        if (!out.empty()) return out.front();
    }
    return std::nullopt;
}

TruncatedGroup centralizer_brute(const std::vector<Automorphism>& xs, int depth,
                                 const std::vector<Permutation>& allowed) {
    if (xs.empty()) throw InputError("empty generator list");
    const int m = xs.front().m();
    AmbientSpec ambient = allowed.empty() ? AmbientSpec::full(m, depth)
                                          : AmbientSpec::layered(m, depth, allowed);
    std::vector<std::pair<Portrait, Portrait>> pairs;
    for (const auto& x : xs) {
        Portrait p = x.portrait(depth);
        pairs.emplace_back(p, p);
    }
    TruncatedGroup g;
    g.m = m;
    g.depth = depth;
    g.elements = intertwiner_scan(ambient, pairs);
    g.complete = true;
    return g;
}

TruncatedGroup centralizer_levelwise(const std::vector<Automorphism>& xs, int depth,
                                     const std::vector<Permutation>& allowed, size_t guard) {
    if (xs.empty()) throw InputError("empty generator list");
    const int m = xs.front().m();
    IntertwinerProblem problem;
    problem.m = m;
    problem.depth = depth;
    problem.allowed = allowed;
    for (const auto& x : xs) {
        Portrait p = x.portrait(depth);
        problem.pairs.emplace_back(p, p);
    }
    return solve_all(problem, guard).group;
}

std::optional<Automorphism> find_conjugator(const Automorphism& x, const Automorphism& y,
                                            int depth, size_t budget) {
    if (x.m() != y.m()) throw InputError("alphabet mismatch");
    IntertwinerProblem problem;
    problem.m = x.m();
    problem.depth = depth;
    problem.pairs.emplace_back(x.portrait(depth), y.portrait(depth));
    auto g = solve_first(problem, budget);
    if (!g) return std::nullopt;
    return lift_portrait(*g);
}

std::optional<Automorphism> conjugator_unit_power(const Automorphism& a, long long xi,
                                                  int depth, size_t budget) {
    return find_conjugator(a.pow(xi), a, depth, budget);
}

} // namespace selfsim
