#include "selfsim/cyclic.hpp"

#include <algorithm>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

Permutation perm_power(const Permutation& sigma, long long j) {
    const int ord = sigma.order();
    long long r = ((j % ord) + ord) % ord;
    Permutation out(sigma.degree());
    for (long long t = 0; t < r; ++t) out = out.then(sigma);
    return out;
}

// cycles of sigma ordered by minimal letter, each starting at its minimum
std::vector<std::vector<int>> sigma_cycles(const Permutation& sigma) {
    const int m = sigma.degree();
    std::vector<bool> seen(static_cast<size_t>(m), false);
    std::vector<std::vector<int>> cycles;
    for (int y = 0; y < m; ++y) {
        if (seen[static_cast<size_t>(y)]) continue;
        std::vector<int> cyc;
        for (int z = y; !seen[static_cast<size_t>(z)]; z = sigma(z)) {
            seen[static_cast<size_t>(z)] = true;
            cyc.push_back(z);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

} // namespace

CyclicMachine::CyclicMachine(Permutation sigma, std::vector<long long> exps, size_t memo_budget)
    : sigma_(std::move(sigma)), exps_(std::move(exps)) {
    if (static_cast<int>(exps_.size()) != sigma_.degree())
        throw InputError("cyclic machine needs one exponent per letter");
    const Permutation sig = sigma_;
    const std::vector<long long> es = exps_;
    auto gen = [sig, es](int64_t j) {
        const int m = sig.degree();
        LazyAutomaton::StateDef def;
        def.perm = perm_power(sig, j);
        def.child.resize(static_cast<size_t>(m));
        for (int y = 0; y < m; ++y) {
            long long e = 0;
            if (j >= 0) {
                int z = y;
                for (long long t = 0; t < j; ++t) {
                    e += es[static_cast<size_t>(z)];
                    z = sig(z);
                }
            } else {
                Permutation inv = sig.inverse();
                int z = y;
                for (long long t = 0; t < -j; ++t) {
                    z = inv(z);
                    e -= es[static_cast<size_t>(z)];
                }
            }
            def.child[static_cast<size_t>(y)] = e;
        }
        return def;
    };
    aut_ = std::make_shared<LazyAutomaton>(sigma_.degree(), gen, 0, memo_budget);
}

Automorphism CyclicMachine::power(long long j) const {
    return Automorphism::from_lazy(aut_, j);
}

long long CyclicMachine::section_exponent(long long j, int letter) const {
    return aut_->eval(j).child[static_cast<size_t>(letter)];
}

Automorphism multi_adding_machine(int m, int s) {
    if (m < 2 || s < 1) throw InputError("multi adding machine needs m >= 2, s >= 1");
    const int deg = m * s;
    std::vector<int> img(static_cast<size_t>(deg));
    for (int b = 0; b < s; ++b)
        for (int p = 0; p < m; ++p)
            img[static_cast<size_t>(b * m + p)] = b * m + (p + 1) % m;
    AutState a;
    a.perm = Permutation::from_images(img);
    a.child.resize(static_cast<size_t>(deg));
    for (int b = 0; b < s; ++b)
        for (int p = 0; p < m; ++p)
            a.child[static_cast<size_t>(b * m + p)] = (p == m - 1) ? 0u : 1u;
    a.name = "a";
    AutState e;
    e.perm = Permutation(deg);
    e.child.assign(static_cast<size_t>(deg), 1);
    e.name = "e";
    auto aut = std::make_shared<Automaton>(deg, std::vector<AutState>{a, e}, 1);
    return Automorphism::from_automaton(aut, 0);
}

Automorphism adding_machine(int m) { return multi_adding_machine(m, 1); }

std::optional<long long> match_power(const Automorphism& section, const Automorphism& a,
                                     long long bound, int probe_depth) {
    for (long long r = 0; r <= bound; ++r) {
        for (long long j : {r, -r}) {
            if (section.equal_at_depth(a.pow(j), probe_depth)) return j;
            if (r == 0) break;
        }
    }
    return std::nullopt;
}

Automorphism CentralizerDescription::instantiate(const Automorphism& a,
                                                 const std::vector<Automorphism>& free_sections) const {
    if (free_sections.size() != stab1_components.size())
        throw InputError("one free section per component required");
    std::vector<Automorphism> sections(static_cast<size_t>(partition.m),
                                       Automorphism::identity(partition.m));
    for (size_t k = 0; k < stab1_components.size(); ++k) {
        const ChainComponent& comp = stab1_components[k];
        const Automorphism& c = free_sections[k];
        sections[static_cast<size_t>(comp.cycle.front())] = c;
        for (size_t l = 1; l < comp.cycle.size(); ++l) {
            Automorphism conj = a.pow(comp.chain_exponents[l - 1]);
            sections[static_cast<size_t>(comp.cycle[l])] = c.conjugate(conj);
        }
    }
    return Automorphism::wreath(Permutation(partition.m), std::move(sections));
}

CentralizerDescription cyclic_centralizer(const Automorphism& a, const OrbitPartition& part,
                                          int depth, long long power_bound) {
    CentralizerDescription desc;
    desc.partition = part;
    desc.depth = depth;
    const Permutation& sigma = a.root_perm();
    const int probe = depth + 2;
    for (size_t oi = 0; oi < part.orbits.size(); ++oi) {
        const auto& orbit = part.orbits[oi];
        ChainComponent comp;
        comp.orbit = static_cast<int>(oi);
        // the orbit must be a single activity cycle
        int y = orbit.front();
        do {
            comp.cycle.push_back(y);
            y = sigma(y);
        } while (y != orbit.front() && comp.cycle.size() <= orbit.size());
        std::vector<int> sorted = comp.cycle;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != orbit)
            throw InputError("partition orbit is not a cycle of the activity");
        long long total = 0;
        for (size_t l = 0; l < comp.cycle.size(); ++l) {
            auto e = match_power(a.section(comp.cycle[l]), a, power_bound, probe);
            if (!e) throw InputError("generator is not self-similar within the power bound");
            total += *e;
            if (l + 1 < comp.cycle.size()) comp.chain_exponents.push_back(total);
        }
        comp.constraint_exponent = total;
        desc.stab1_components.push_back(std::move(comp));
    }
    desc.b_part = factor(a, part).factors;
    // rigid lifts: identity sections first, then the levelwise search
    PermGroup rigid = rigid_group(part);
    Portrait pa = a.portrait(depth);
    for (const auto& xi : rigid.elements()) {
        if (xi.is_identity()) continue;
        desc.s_candidates.push_back(xi);
        if (!sigma.commutes_with(xi)) continue;
        Automorphism plain = Automorphism::wreath(
            xi, std::vector<Automorphism>(static_cast<size_t>(part.m),
                                          Automorphism::identity(part.m)));
        if (commute_at_depth(a, plain, depth)) {
            desc.rigid_part.push_back(plain);
            desc.rigid_roots.push_back(xi);
            continue;
        }
        IntertwinerProblem problem;
        problem.m = part.m;
        problem.depth = depth;
        problem.pairs.emplace_back(pa, pa);
        problem.root_candidates = {xi};
        if (auto found = solve_first(problem)) {
            desc.rigid_part.push_back(lift_portrait(*found));
            desc.rigid_roots.push_back(xi);
        }
    }
    return desc;
}

std::pair<Automorphism, Automorphism> normal_form_conjugator(const Automorphism& a, int depth) {
    const int m = a.m();
    if (depth == 0) return {Automorphism::identity(m), a};
    const Permutation& sigma = a.root_perm();
    auto cycles = sigma_cycles(sigma);
    std::vector<Automorphism> gsec(static_cast<size_t>(m), Automorphism::identity(m));
    for (const auto& cyc : cycles) {
        // g = (d_1, e, d_2^{-1}, (d_2 d_3)^{-1}, ...) along the cycle
        gsec[static_cast<size_t>(cyc.front())] = a.section(cyc.front());
        Automorphism run;
        for (size_t l = 2; l < cyc.size(); ++l) {
            Automorphism d = a.section(cyc[l - 1]);
            run = run.valid() ? run.then(d) : d;
            gsec[static_cast<size_t>(cyc[l])] = run.inverse();
        }
    }
    Automorphism g1 = Automorphism::wreath(Permutation(m), gsec);
    std::vector<Automorphism> hsec(static_cast<size_t>(m), Automorphism::identity(m));
    std::vector<Automorphism> bsec(static_cast<size_t>(m), Automorphism::identity(m));
    for (const auto& cyc : cycles) {
        // cycle product d_2 d_3 ... d_t d_1 lands at the last letter
        Automorphism c = a.section(cyc.front());
        if (cyc.size() > 1) {
            c = a.section(cyc[1]);
            for (size_t l = 2; l < cyc.size(); ++l) c = c.then(a.section(cyc[l]));
            c = c.then(a.section(cyc.front()));
        }
        auto [hc, cnf] = normal_form_conjugator(c, depth - 1);
        for (int letter : cyc) hsec[static_cast<size_t>(letter)] = hc;
        bsec[static_cast<size_t>(cyc.back())] = cnf;
    }
    Automorphism h = Automorphism::wreath(Permutation(m), hsec);
    Automorphism g = g1.then(h);
    Automorphism b = Automorphism::wreath(sigma, bsec);
    if (!a.conjugate(g).equal_at_depth(b, depth))
        throw std::logic_error("normal form construction failed its verification gate");
    return {g, b};
}

bool in_right_normal_form(const Automorphism& a, int depth) {
    if (depth <= 0) return true;
    auto cycles = sigma_cycles(a.root_perm());
    for (const auto& cyc : cycles) {
        for (size_t l = 0; l + 1 < cyc.size(); ++l)
            if (!a.section(cyc[l]).is_trivial_at_depth(depth - 1)) return false;
        if (!in_right_normal_form(a.section(cyc.back()), depth - 1)) return false;
    }
    return true;
}

namespace {

long long two_adic(long long v) {
    if (v == 0) return -1; // stands in for infinity
    long long k = 0;
    while (v % 2 == 0) {
        v /= 2;
        ++k;
    }
    return k;
}

void line(T4Report& rep, const std::string& text) { rep.lines.push_back(text); }

void check(T4Report& rep, bool ok, const std::string& what) {
    rep.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    if (!ok) rep.pass = false;
}

} // namespace

T4Report t4_analysis(const std::vector<int>& orbit_type, const std::vector<long long>& exps,
                     int depth) {
    if (exps.size() != 4) throw InputError("t4 analysis needs four exponents");
    T4Report rep;
    rep.exps = exps;
    rep.depth = depth;
    Permutation sigma(4);
    if (orbit_type == std::vector<int>{2, 2}) {
        rep.orbit_type = "(2,2)";
        sigma = Permutation::parse("(1 2)(3 4)", 4);
    } else if (orbit_type == std::vector<int>{2, 1, 1}) {
        rep.orbit_type = "(2,1,1)";
        sigma = Permutation::parse("(1 2)", 4);
    } else if (orbit_type == std::vector<int>{3, 1}) {
        rep.orbit_type = "(3,1)";
        sigma = Permutation::parse("(1 2 3)", 4);
    } else {
        throw InputError("orbit type must be (2,2), (2,1,1) or (3,1)");
    }
    CyclicMachine machine(sigma, exps);
    Automorphism a = machine.element();
    OrbitPartition part = activity_orbits({a});
    rep.description = cyclic_centralizer(a, part, depth);
    line(rep, "orbit-type " + rep.orbit_type);
    for (const auto& comp : rep.description.stab1_components) {
        std::ostringstream os;
        os << "stab component orbit " << comp.orbit + 1 << " rep letter "
           << comp.cycle.front() + 1 << " constraint C(a^" << comp.constraint_exponent << ")";
        line(rep, os.str());
    }
    for (const auto& b : rep.description.b_part)
        check(rep, commute_at_depth(a, b, depth), "B(A) generator commutes with a");
    // chain instantiation with a central sample section
    for (size_t k = 0; k < rep.description.stab1_components.size(); ++k) {
        std::vector<Automorphism> frees(rep.description.stab1_components.size(),
                                        Automorphism::identity(4));
        frees[k] = a.pow(rep.description.stab1_components[k].constraint_exponent);
        Automorphism c = rep.description.instantiate(a, frees);
        check(rep, commute_at_depth(a, c, depth), "stab chain element commutes with a");
    }

    if (rep.orbit_type == "(2,2)") {
        const long long j1 = exps[0] + exps[1], j3 = exps[2] + exps[3];
        const bool e1 = (((j1 % 2) + 2) % 2) == 0, e3 = (((j3 % 2) + 2) % 2) == 0;
        Permutation swap22 = Permutation::parse("(1 3)(2 4)", 4);
        if (e1 && e3) {
            rep.verdict = T4Case::EvenEven;
            rep.case_label = "(i) j1, j3 even";
            rep.square_trivial = a.pow(2).is_trivial_at_depth(std::max(4, depth));
            check(rep, rep.square_trivial, "a^2 trivial at depth 4");
            check(rep, a.pow(j1).is_trivial_at_depth(std::max(4, depth)), "a^j1 trivial");
            check(rep, a.pow(j3).is_trivial_at_depth(std::max(4, depth)), "a^j3 trivial");
            std::vector<Automorphism> rsec = {
                Automorphism::identity(4), a.pow(exps[2] - exps[0]),
                Automorphism::identity(4), a.pow(exps[0] - exps[2])};
            rep.rigid = Automorphism::wreath(swap22, rsec);
            rep.rigid_commutes = commute_at_depth(a, *rep.rigid, depth);
            check(rep, rep.rigid_commutes, "case (i) rigid element commutes with a");
        } else if (!e1 && !e3) {
            rep.verdict = T4Case::OddOdd;
            rep.case_label = "(ii) j1, j3 odd";
            auto r1 = find_conjugator(a.pow(j1), a.pow(j3), depth);
            check(rep, r1.has_value(), "conjugator from a^j1 to a^j3 exists");
            if (r1) {
                std::vector<Automorphism> rsec = {
                    *r1, a.pow(-exps[0]).then(*r1).then(a.pow(exps[2])), r1->inverse(),
                    a.pow(-exps[2]).then(r1->inverse()).then(a.pow(exps[0]))};
                rep.rigid = Automorphism::wreath(swap22, rsec);
                rep.rigid_commutes = commute_at_depth(a, *rep.rigid, depth);
                check(rep, rep.rigid_commutes, "case (ii) rigid element commutes with a");
            }
        } else {
            rep.verdict = T4Case::Mixed;
            rep.case_label = "(iii) j1, j3 of distinct parity";
            rep.tester_absent = !find_conjugator(a.pow(j1), a.pow(j3), std::min(depth, 3));
            check(rep, rep.tester_absent, "a^j1 not conjugate to a^j3 at depth 3");
            check(rep, rep.description.rigid_part.empty(), "R(A) empty");
        }
    } else if (rep.orbit_type == "(2,1,1)") {
        const long long k3 = two_adic(exps[2]), k4 = two_adic(exps[3]);
        auto r3 = find_conjugator(a.pow(exps[2]), a.pow(exps[3]), depth);
        if (r3) {
            rep.verdict = T4Case::ConjugatePair;
            rep.case_label = "(i) a^i3 conjugate to a^i4";
            std::vector<Automorphism> rsec = {Automorphism::identity(4),
                                              Automorphism::identity(4), *r3, r3->inverse()};
            rep.rigid = Automorphism::wreath(Permutation::parse("(3 4)", 4), rsec);
            rep.rigid_commutes = commute_at_depth(a, *rep.rigid, depth);
            check(rep, rep.rigid_commutes, "rigid element (3 4)-lift commutes with a");
            check(rep, k3 == k4, "matching 2-adic valuations");
        } else {
            rep.verdict = T4Case::NotConjugate;
            rep.case_label = "(ii) a^i3 not conjugate to a^i4";
            rep.tester_absent = true;
            check(rep, rep.description.rigid_part.empty(), "R(A) empty");
            check(rep, k3 != k4, "distinct 2-adic valuations");
        }
    } else {
        rep.verdict = T4Case::StabOnly;
        rep.case_label = "C(A) = Stab_C(1) B(A)";
        check(rep, rep.description.rigid_part.empty(), "R(A) empty (rigid group trivial)");
        check(rep, rep.description.s_candidates.empty(), "no rigid candidates for (3,1)");
    }
    return rep;
}

} // namespace selfsim
