#include "selfsim/verify.hpp"

#include <algorithm>
#include <sstream>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

bool orbit_preserving(const Permutation& p, const OrbitPartition& part) {
    for (const auto& orbit : part.orbits)
        for (int y : orbit)
            if (part.orbit_of(p(y)) != part.orbit_of(y)) return false;
    return true;
}

TheoremReport verify_against(const std::vector<Automorphism>& gens,
                             const std::vector<Automorphism>& b_side, const OrbitPartition& part,
                             int depth, const TheoremOptions& options, const char* side_name) {
    TheoremReport out;
    Report& rep = out.report;
    const int m = part.m;
    std::ostringstream head;
    head << "depth " << depth << ", m " << m;
    rep.note(head.str());

    std::vector<Automorphism> dc = delta_closure(gens, part, depth);
    out.centralizer = centralizer_levelwise(dc, depth, options.allowed);
    rep.check(out.centralizer.complete, "centralizer enumeration complete");
    out.centralizer_order = out.centralizer.order();

    if (options.brute_cross_check) {
        TruncatedGroup brute = centralizer_brute(dc, depth, options.allowed);
        rep.check(brute.same_elements(out.centralizer), "solver agrees with exhaustive scan");
    }

    bool rigid_empty = true;
    for (const auto& c : out.centralizer.elements)
        if (!orbit_preserving(c.perm_at(0, 0), part)) rigid_empty = false;
    rep.check(rigid_empty, "centralizer leaves each orbit invariant (rigid part empty)");

    std::vector<Automorphism> db = delta_closure(b_side, part, depth);
    out.generated = closure(m, depth, portraits_of(db, depth));
    out.generated_order = out.generated.order();

    std::ostringstream orders;
    orders << "orders: centralizer " << out.centralizer_order << ", " << side_name << " "
           << out.generated_order;
    rep.note(orders.str());
    rep.check(out.centralizer.same_elements(out.generated),
              std::string("centralizer equals the closure of the diagonal closure of ") + side_name);
    return out;
}

} // namespace

TheoremReport verify_theorem_A(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                               int depth, const TheoremOptions& options) {
    return verify_against(gens, b_group(gens, part), part, depth, options, "B(A)");
}

std::vector<Automorphism> theorem_b_lifts(const std::vector<Automorphism>& gens,
                                          const OrbitPartition& part) {
    std::vector<Automorphism> lifts;
    for (const auto& g : gens) {
        auto factors = factor(g, part).factors;
        for (auto& f : factors)
            if (!f.root_perm().is_identity()) lifts.push_back(std::move(f));
    }
    if (lifts.empty()) lifts.push_back(Automorphism::identity(part.m));
    return lifts;
}

TheoremReport verify_theorem_B(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                               int depth, const TheoremOptions& options) {
    return verify_against(gens, theorem_b_lifts(gens, part), part, depth, options, "H");
}

ExponentReport exponent_check(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                              int depth) {
    ExponentReport out;
    std::vector<Automorphism> db = delta_closure(b_group(gens, part), part, depth);
    auto dbp = portraits_of(db, depth);
    bool abelian = true;
    for (size_t i = 0; i < dbp.size(); ++i)
        for (size_t j = i + 1; j < dbp.size(); ++j)
            if (!dbp[i].commutes_with(dbp[j])) abelian = false;
    out.report.check(abelian, "diagonal closure of B(A) is abelian at truncation");
    if (!abelian) return out;
    long long e = 1;
    for (const auto& p : dbp) e = lcm_ll(e, p.order());
    std::vector<Automorphism> h = theorem_b_lifts(gens, part);
    long long eh = 1;
    for (const auto& p : portraits_of(h, depth)) eh = lcm_ll(eh, p.order());
    out.exponent = e;
    std::ostringstream os;
    os << "exponent " << e << " (H exponent " << eh << ")";
    out.report.note(os.str());
    out.report.check(e == eh, "closure exponent equals the exponent of H");
    return out;
}

Report verify_prop_4_2(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                       int depth) {
    Report rep;
    const int m = part.m;
    // (i) level-one stabilizer elements have constant sections on each orbit
    TruncatedGroup a_trunc = closure(m, depth, portraits_of(gens, depth));
    bool constant = true;
    for (const auto& p : a_trunc.elements) {
        if (!p.perm_at(0, 0).is_identity()) continue;
        for (const auto& orbit : part.orbits) {
            // sections of a depth-k portrait are depth-(k-1) portraits
            Automorphism lifted = lift_portrait(p);
            Portrait first = lifted.section(orbit.front()).portrait(depth - 1);
            for (int y : orbit)
                if (lifted.section(y).portrait(depth - 1) != first) constant = false;
        }
    }
    rep.check(constant, "Stab_A(1) sections are constant on each orbit");

    // (iv) B(A) centralizes Stab_{C(A)}(1)
    TruncatedGroup cent = centralizer_levelwise(gens, depth);
    TruncatedGroup b_trunc = closure(m, depth, portraits_of(b_group(gens, part), depth));
    bool centralizes = true;
    for (const auto& c : cent.elements) {
        if (!c.perm_at(0, 0).is_identity()) continue;
        for (const auto& b : b_trunc.elements)
            if (!c.commutes_with(b)) centralizes = false;
    }
    rep.check(centralizes, "B(A) centralizes Stab_{C(A)}(1)");

    // (vi) diagonal closures stay abelian with the same permutation type
    for (const auto* side : {"A", "B(A)"}) {
        std::vector<Automorphism> base =
            std::string(side) == "A" ? gens : b_group(gens, part);
        auto dc = portraits_of(delta_closure(base, part, depth), depth);
        bool abelian = true;
        for (size_t i = 0; i < dc.size(); ++i)
            for (size_t j = i + 1; j < dc.size(); ++j)
                if (!dc[i].commutes_with(dc[j])) abelian = false;
        rep.check(abelian, std::string("diagonal closure of ") + side + " is abelian at truncation");
    }
    auto dc_gens = delta_closure(gens, part, depth);
    OrbitPartition dc_part = activity_orbits(dc_gens);
    rep.check(dc_part == part, "diagonal closure keeps the orbit partition");
    return rep;
}

} // namespace selfsim
