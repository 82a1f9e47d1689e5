#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "selfsim/errors.hpp"

namespace selfsim {

// Permutation of the alphabet {1..m}, stored 0-based. All group actions in
// this library are right actions, so composition reads left to right:
// (p.then(q))(y) == q(p(y)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int m) : img_(m) {
        for (int i = 0; i < m; ++i) img_[i] = static_cast<uint8_t>(i);
    }

    // images are 0-based and must form a bijection
    static Permutation from_images(std::vector<int> images);

    // "(1 2)(3 4)" or "2 1 4 3" (1-based); m is the alphabet size
    static Permutation parse(const std::string& text, int m);

    static Permutation cycle(int m, const std::vector<int>& pts_zero_based);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int y) const { return img_[static_cast<size_t>(y)]; }

    // this first, then q
    Permutation then(const Permutation& q) const;
    Permutation inverse() const;

    bool is_identity() const;
    int order() const;

    bool commutes_with(const Permutation& q) const { return then(q) == q.then(*this); }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    // 1-based image list, e.g. "2 1 4 3"
    std::string image_string() const;
    // cycle notation, e.g. "(1 2)(3 4)"; "()" for the identity
    std::string cycle_string() const;

    const std::vector<uint8_t>& images() const { return img_; }

private:
    std::vector<uint8_t> img_;
};

// All m! permutations of degree m in lexicographic image order.
std::vector<Permutation> all_permutations(int m);

} // namespace selfsim
