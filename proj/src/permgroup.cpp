#include "selfsim/permgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace selfsim {

int OrbitPartition::orbit_of(int y) const {
    for (size_t i = 0; i < orbits.size(); ++i)
        if (std::binary_search(orbits[i].begin(), orbits[i].end(), y))
            return static_cast<int>(i);
    throw InputError("letter outside partition");
}

PermGroup::PermGroup(int m, std::vector<Permutation> generators)
    : m_(m), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (g.degree() != m_) throw InputError("generator degree mismatch");
}

const std::vector<Permutation>& PermGroup::elements() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->elems) return *cache_->elems;
    if (m_ > 12) throw SizeError("permutation group enumeration limited to degree 12");
    std::set<Permutation> seen;
    std::vector<Permutation> frontier;
    seen.insert(Permutation(m_));
    frontier.push_back(Permutation(m_));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens_) {
                Permutation q = p.then(g);
                if (seen.insert(q).second) {
                    next.push_back(std::move(q));
                    if (seen.size() > kElementGuard)
                        throw SizeError("permutation group too large to enumerate");
                }
            }
        }
        frontier = std::move(next);
    }
    cache_->elems = std::vector<Permutation>(seen.begin(), seen.end());
    return *cache_->elems;
}

bool PermGroup::contains(const Permutation& p) const {
    const auto& e = elements();
    return std::binary_search(e.begin(), e.end(), p);
}

bool PermGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (!gens_[i].commutes_with(gens_[j])) return false;
    return true;
}

bool PermGroup::is_transitive() const { return orbits(*this).size() == 1; }

bool PermGroup::is_trivial() const {
    for (const auto& g : gens_)
        if (!g.is_identity()) return false;
    return true;
}

OrbitPartition orbits(const PermGroup& p) {
    const int m = p.degree();
    std::vector<int> parent(static_cast<size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& g : p.generators())
        for (int y = 0; y < m; ++y) {
            int a = find(y), b = find(g(y));
            if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::map<int, std::vector<int>> buckets;
    for (int y = 0; y < m; ++y) buckets[find(y)].push_back(y);
    OrbitPartition part;
    part.m = m;
    for (auto& [root, letters] : buckets) {
        std::sort(letters.begin(), letters.end());
        part.orbits.push_back(letters);
    }
    return part;
}

namespace {

// restriction of g to orbit letters, renumbered 0..|orbit|-1 in sorted order
Permutation restrict_to(const Permutation& g, const std::vector<int>& orbit) {
    std::vector<int> img(orbit.size());
    for (size_t k = 0; k < orbit.size(); ++k) {
        int image = g(orbit[k]);
        auto it = std::lower_bound(orbit.begin(), orbit.end(), image);
        if (it == orbit.end() || *it != image)
            throw InputError("permutation does not preserve the orbit");
        img[k] = static_cast<int>(it - orbit.begin());
    }
    return Permutation::from_images(img);
}

// embed a degree-|orbit| permutation back into Sym(m) supported on the orbit
Permutation embed_from(const Permutation& g, const std::vector<int>& orbit, int m) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    for (size_t k = 0; k < orbit.size(); ++k)
        img[static_cast<size_t>(orbit[k])] = orbit[static_cast<size_t>(g(static_cast<int>(k)))];
    return Permutation::from_images(img);
}

// Order-isomorphism O_i -> O_j intertwining the restricted generator actions,
// propagated from a seed image of the first letter; nullopt if none works.
std::optional<std::vector<int>> find_intertwiner(const std::vector<Permutation>& gens,
                                                 const std::vector<int>& oi,
                                                 const std::vector<int>& oj) {
    const size_t n = oi.size();
    for (size_t seed = 0; seed < n; ++seed) {
        std::vector<int> phi(n, -1); // phi[k]: image in oj of letter oi[k], as index into oj
        phi[0] = static_cast<int>(seed);
        std::vector<size_t> stack = {0};
        bool ok = true;
        while (ok && !stack.empty()) {
            size_t k = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                int from = g(oi[k]);
                auto it = std::lower_bound(oi.begin(), oi.end(), from);
                size_t k2 = static_cast<size_t>(it - oi.begin());
                int to = g(oj[static_cast<size_t>(phi[k])]);
                auto jt = std::lower_bound(oj.begin(), oj.end(), to);
                int v = static_cast<int>(jt - oj.begin());
                if (phi[k2] == -1) {
                    phi[k2] = v;
                    stack.push_back(k2);
                } else if (phi[k2] != v) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        bool total = std::find(phi.begin(), phi.end(), -1) == phi.end();
        if (!total) continue; // generators act transitively on orbits, so this should not happen
        std::vector<bool> hit(n, false);
        for (int v : phi) {
            if (hit[static_cast<size_t>(v)]) { total = false; break; }
            hit[static_cast<size_t>(v)] = true;
        }
        if (!total) continue;
        // full verification against every generator
        bool valid = true;
        for (const auto& g : gens) {
            for (size_t k = 0; k < n && valid; ++k) {
                int lhs = g(oj[static_cast<size_t>(phi[k])]);
                int from = g(oi[k]);
                auto it = std::lower_bound(oi.begin(), oi.end(), from);
                int rhs = oj[static_cast<size_t>(phi[static_cast<size_t>(it - oi.begin())])];
                if (lhs != rhs) valid = false;
            }
            if (!valid) break;
        }
        if (valid) {
            std::vector<int> out(n);
            for (size_t k = 0; k < n; ++k) out[k] = oj[static_cast<size_t>(phi[k])];
            return out;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<PermGroup> permutation_type(const PermGroup& p, const OrbitPartition& part) {
    std::vector<PermGroup> out;
    out.reserve(part.orbits.size());
    for (const auto& orbit : part.orbits) {
        std::vector<Permutation> gens;
        for (const auto& g : p.generators()) {
            Permutation r = restrict_to(g, orbit);
            if (!r.is_identity()) gens.push_back(r);
        }
        out.emplace_back(static_cast<int>(orbit.size()), gens);
    }
    return out;
}

bool is_subdirect_proper(const PermGroup& p, const OrbitPartition& part) {
    auto factors = permutation_type(p, part);
    size_t prod = 1;
    for (const auto& f : factors) prod *= f.order();
    return p.order() == prod;
}

bool is_rigid(const Permutation& xi, const OrbitPartition& part) {
    for (const auto& orbit : part.orbits) {
        std::vector<int> image;
        image.reserve(orbit.size());
        for (int y : orbit) image.push_back(xi(y));
        // image letters must form one orbit of the partition, in order
        int target = part.orbit_of(image.front());
        if (part.orbits[static_cast<size_t>(target)].size() != orbit.size()) return false;
        if (image != part.orbits[static_cast<size_t>(target)]) return false;
    }
    return true;
}

PermGroup rigid_group(const OrbitPartition& part) {
    std::vector<Permutation> gens;
    const int m = part.m;
    for (size_t i = 0; i < part.orbits.size(); ++i) {
        for (size_t j = i + 1; j < part.orbits.size(); ++j) {
            if (part.orbits[i].size() != part.orbits[j].size()) continue;
            std::vector<int> img(static_cast<size_t>(m));
            std::iota(img.begin(), img.end(), 0);
            for (size_t k = 0; k < part.orbits[i].size(); ++k) {
                img[static_cast<size_t>(part.orbits[i][k])] = part.orbits[j][k];
                img[static_cast<size_t>(part.orbits[j][k])] = part.orbits[i][k];
            }
            gens.push_back(Permutation::from_images(img));
            break; // adjacent swaps generate the rest
        }
    }
    if (gens.empty()) gens.push_back(Permutation(m));
    return PermGroup(m, gens);
}

PermGroup centralizer_sym_brute(const PermGroup& q) {
    const int m = q.degree();
    if (m > 12) throw SizeError("centralizer brute force limited to degree 12");
    std::vector<Permutation> good;
    for (const auto& c : all_permutations(m)) {
        bool ok = true;
        for (const auto& g : q.generators())
            if (!c.commutes_with(g)) { ok = false; break; }
        if (ok) good.push_back(c);
    }
    return PermGroup(m, good);
}

PermGroup centralizer_sym(const PermGroup& q) {
    const int m = q.degree();
    if (m > 32) throw SizeError("centralizer_sym limited to degree 32");
    OrbitPartition part = orbits(q);
    // per-orbit centralizers
    std::vector<Permutation> gens;
    auto factors = permutation_type(q, part);
    for (size_t i = 0; i < part.orbits.size(); ++i) {
        const auto& orbit = part.orbits[i];
        if (factors[i].is_abelian()) {
            // transitive abelian groups are regular, hence self-centralizing
            for (const auto& g : factors[i].generators())
                gens.push_back(embed_from(g, orbit, m));
        } else {
            if (orbit.size() > 10)
                throw SizeError("non-abelian orbit too large for per-orbit brute force");
            PermGroup c = centralizer_sym_brute(factors[i]);
            for (const auto& g : c.generators())
                if (!g.is_identity()) gens.push_back(embed_from(g, orbit, m));
        }
    }
    // swaps between orbits with intertwinable actions
    for (size_t i = 0; i < part.orbits.size(); ++i) {
        for (size_t j = i + 1; j < part.orbits.size(); ++j) {
            if (part.orbits[i].size() != part.orbits[j].size()) continue;
            auto phi = find_intertwiner(q.generators(), part.orbits[i], part.orbits[j]);
            if (!phi) continue;
            std::vector<int> img(static_cast<size_t>(m));
            std::iota(img.begin(), img.end(), 0);
            for (size_t k = 0; k < part.orbits[i].size(); ++k) {
                img[static_cast<size_t>(part.orbits[i][k])] = (*phi)[k];
                img[static_cast<size_t>((*phi)[k])] = part.orbits[i][k];
            }
            gens.push_back(Permutation::from_images(img));
        }
    }
    if (gens.empty()) gens.push_back(Permutation(m));
    return PermGroup(m, gens);
}

Permutation block_relabeling(const OrbitPartition& part) {
    std::vector<int> img(static_cast<size_t>(part.m));
    int next = 0;
    for (const auto& orbit : part.orbits)
        for (int y : orbit) img[static_cast<size_t>(y)] = next++;
    return Permutation::from_images(img);
}

} // namespace selfsim
