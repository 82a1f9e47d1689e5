#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace selfsim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<std::vector<Rat>>;

// canonical row Hermite normal form; zero rows dropped
IntMatrix hnf(IntMatrix rows);
// (H, U) with U unimodular and U * rows = [H; 0-rows]; U rows beyond the
// rank of H span the integer row kernel
std::pair<IntMatrix, IntMatrix> hnf_with_transform(IntMatrix rows);
// integer row kernel: all c with c * m = 0
IntMatrix int_kernel(const IntMatrix& m);

// Sublattice of Z^n held by its canonical HNF basis. All arithmetic is
// exact.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(int dim) : dim_(dim) {} // zero lattice
    static Lattice standard(int dim);
    static Lattice from_rows(int dim, IntMatrix rows);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    const IntMatrix& basis() const { return basis_; }

    // index in Z^n when full rank
    std::optional<Int> index() const;
    bool contains(const IntVec& v) const;
    bool contains(const Lattice& other) const;
    // gcd of all basis entries = first elementary divisor; every lattice
    // vector is divisible by it
    Int entry_gcd() const;
    Lattice scaled(const Int& d) const;

    bool operator==(const Lattice&) const = default;

private:
    int dim_ = 0;
    IntMatrix basis_;
};

Lattice intersect(const Lattice& a, const Lattice& b);

// Homomorphism from a finite-index sublattice of Z^n into Z^n, given by a
// rational matrix acting on row vectors. Valid when every domain basis
// vector maps to an integer vector.
struct VirtualEndo {
    Lattice domain;
    RatMatrix matrix;

    int dim() const { return domain.dim(); }
    bool integral_on_domain() const;
    IntVec apply(const IntVec& v) const; // throws InputError if not integral

    Lattice image_of(const Lattice& l) const;   // l must lie in the domain
    Lattice image() const { return image_of(domain); }
    Lattice kernel_lattice() const;             // {h in domain : f(h) = 0}
    Lattice preimage(const Lattice& k) const;   // {h in domain : f(h) in k}
};

IntVec int_vec(const std::vector<long long>& v);
std::string format_matrix(const IntMatrix& m);

} // namespace selfsim
