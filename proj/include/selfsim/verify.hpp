#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/cyclic.hpp"
#include "selfsim/diag.hpp"
#include "selfsim/solver.hpp"

namespace selfsim {

struct Report {
    std::vector<std::string> lines;
    bool pass = true;

    void check(bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
        if (!ok) pass = false;
    }
    void note(const std::string& text) { lines.push_back(text); }
};

// Compare the centralizer of the length-k diagonal closure of A against the
// truncated group generated by the diagonal closure of B(A); also asserts
// that the centralizer leaves every orbit invariant (empty rigid part).
// `allowed` restricts the ambient per-vertex permutations (layer-closure
// guard); empty means all of Sym(m). When `brute_cross_check` is set the
// solver output is compared against the exhaustive scan.
struct TheoremOptions {
    std::vector<Permutation> allowed;
    bool brute_cross_check = false;
};

struct TheoremReport {
    Report report;
    size_t centralizer_order = 0;
    size_t generated_order = 0;
    TruncatedGroup centralizer;
    TruncatedGroup generated;
    bool pass() const { return report.pass; }
};

TheoremReport verify_theorem_A(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                               int depth, const TheoremOptions& options = {});

// same equality with a finitely generated H in place of B(A): one
// activity-generating lift per orbit
TheoremReport verify_theorem_B(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                               int depth, const TheoremOptions& options = {});

// the generators of H used by the theorem-B construction
std::vector<Automorphism> theorem_b_lifts(const std::vector<Automorphism>& gens,
                                          const OrbitPartition& part);

// exponent of the truncated closure of the diagonal closure of B(A), checked
// against the exponent of H; both groups must be abelian at truncation
struct ExponentReport {
    Report report;
    long long exponent = 0;
};
ExponentReport exponent_check(const std::vector<Automorphism>& gens, const OrbitPartition& part,
                              int depth);

// structural facts about centralizers of abelian self-similar groups at
// truncation: constant sections on orbits for level-one stabilizer elements,
// B(A) centralizing Stab_{C(A)}(1), abelianness of the diagonal closures
Report verify_prop_4_2(const std::vector<Automorphism>& gens, const OrbitPartition& part, int depth);

} // namespace selfsim
