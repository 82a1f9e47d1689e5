#include "selfsim/families.hpp"

#include <sstream>

#include "selfsim/io.hpp"

namespace selfsim {

IndexMapFamily::IndexMapFamily(int m, FamilyVariant variant, size_t memo_budget)
    : m_(m), variant_(variant) {
    if (m < 2) throw InputError("family base must satisfy m >= 2");
    const int alpha = m + 1;
    std::vector<int> img(static_cast<size_t>(alpha));
    for (int y = 0; y < alpha; ++y) img[static_cast<size_t>(y)] = y;
    for (int y = 0; y < m; ++y) img[static_cast<size_t>(y)] = (y + 1) % m;
    const Permutation base_cycle = Permutation::from_images(img);
    const int mm = m;
    const FamilyVariant var = variant;
    auto gen = [mm, var, base_cycle](int64_t id) {
        const int alpha = mm + 1;
        LazyAutomaton::StateDef def;
        def.perm = Permutation(alpha);
        def.child.assign(static_cast<size_t>(alpha), 0);
        if (id == 0) return def;
        if (id == 1) {
            def.perm = base_cycle;
            def.child[static_cast<size_t>(mm - 1)] = 1;
            return def;
        }
        if (var == FamilyVariant::InfiniteRank) {
            if (id % 2 == 0) {
                def.child[static_cast<size_t>(mm)] = id / 2; // alpha_{2i} = alpha_i^{x_2}
            } else {
                for (int y = 0; y < mm; ++y)
                    def.child[static_cast<size_t>(y)] = (id + 1) / 2; // alpha_{2i-1} = alpha_i^{x_1}
            }
        } else {
            for (int y = 0; y < mm; ++y) def.child[static_cast<size_t>(y)] = id;
            def.child[static_cast<size_t>(mm)] = id - 1;
        }
        return def;
    };
    aut_ = std::make_shared<LazyAutomaton>(alpha, gen, 0, memo_budget);
}

OrbitPartition IndexMapFamily::partition() const {
    OrbitPartition part;
    part.m = alphabet();
    std::vector<int> block;
    for (int y = 0; y < m_; ++y) block.push_back(y);
    part.orbits = {block, {m_}};
    return part;
}

Automorphism IndexMapFamily::realize(long long index) const {
    if (index < 1) throw InputError("family indices start at 1");
    return Automorphism::from_lazy(aut_, index);
}

IndexMapFamily theorem_c_family(int m, FamilyVariant variant) {
    return IndexMapFamily(m, variant);
}

Report delta_invariance_check(const IndexMapFamily& f, long long bound) {
    Report rep;
    OrbitPartition part = f.partition();
    auto structurally_equal = [](const Automorphism& a, const Automorphism& b) {
        return serialize_automorphism(a) == serialize_automorphism(b);
    };
    if (f.variant() == FamilyVariant::InfiniteRank) {
        for (long long i = 2; i <= bound; ++i) {
            std::ostringstream os;
            os << "alpha_" << i << "^{x_1} = alpha_" << 2 * i - 1;
            rep.check(structurally_equal(x_i(f.realize(i), part, 0), f.realize(2 * i - 1)), os.str());
        }
        for (long long i = 1; i <= bound; ++i) {
            std::ostringstream os;
            os << "alpha_" << i << "^{x_2} = alpha_" << 2 * i;
            rep.check(structurally_equal(x_i(f.realize(i), part, 1), f.realize(2 * i)), os.str());
        }
        rep.check(x_i(f.realize(1), part, 0).equal(f.realize(1).pow(f.m())),
                  "alpha_1^{x_1} = alpha_1^m");
    } else {
        rep.check(x_i(f.realize(1), part, 0).equal(f.realize(1).pow(f.m())),
                  "beta_1^{x_1} = beta_1^m");
        for (long long i = 1; i <= bound; ++i) {
            // beta_i^{x_2} = beta_{i+1} (beta_{i+1}^{x_1})^{-1}
            Automorphism next = f.realize(i + 1);
            Automorphism rhs = next.then(x_i(next, part, 0).inverse());
            std::ostringstream os;
            os << "beta_" << i << "^{x_2} = beta_" << i + 1 << " (beta_" << i + 1 << "^{x_1})^{-1}";
            rep.check(x_i(f.realize(i), part, 1).equal(rhs), os.str());
        }
        for (long long i = 2; i <= bound; ++i) {
            // beta_i^{x_1} = beta_i (beta_{i-1}^{x_2})^{-1}
            Automorphism rhs = f.realize(i).then(x_i(f.realize(i - 1), part, 1).inverse());
            std::ostringstream os;
            os << "beta_" << i << "^{x_1} = beta_" << i << " (beta_" << i - 1 << "^{x_2})^{-1}";
            rep.check(x_i(f.realize(i), part, 0).equal(rhs), os.str());
        }
    }
    return rep;
}

Report independence_check(const IndexMapFamily& f, int rank, int coeff_bound, int depth) {
    Report rep;
    if (rank < 1 || coeff_bound < 1) throw InputError("independence check needs positive bounds");
    // precompute powers
    std::vector<std::vector<Automorphism>> powers(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        Automorphism g = f.realize(i + 1);
        for (int c = -coeff_bound; c <= coeff_bound; ++c)
            powers[static_cast<size_t>(i)].push_back(g.pow(c));
    }
    std::vector<int> coeff(static_cast<size_t>(rank), -coeff_bound);
    size_t checked = 0, relations = 0;
    for (;;) {
        bool all_zero = true;
        for (int c : coeff)
            if (c != 0) all_zero = false;
        if (!all_zero) {
            Automorphism prod;
            for (int i = 0; i < rank; ++i) {
                const Automorphism& p =
                    powers[static_cast<size_t>(i)][static_cast<size_t>(coeff[static_cast<size_t>(i)] + coeff_bound)];
                prod = prod.valid() ? prod.then(p) : p;
            }
            ++checked;
            if (prod.is_trivial_at_depth(depth)) ++relations;
        }
        int j = rank - 1;
        while (j >= 0) {
            if (++coeff[static_cast<size_t>(j)] <= coeff_bound) break;
            coeff[static_cast<size_t>(j)] = -coeff_bound;
            --j;
        }
        if (j < 0) break;
    }
    std::ostringstream os;
    os << "checked " << checked << " exponent vectors at depth " << depth;
    rep.note(os.str());
    rep.check(relations == 0, "no nontrivial product vanishes");
    return rep;
}

} // namespace selfsim
