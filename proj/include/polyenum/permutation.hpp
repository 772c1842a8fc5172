#pragma once

// Permutations of {0, ..., n-1} stored as image arrays: images[x] = x^sigma.

#include <string>
#include <string_view>
#include <vector>

#include "polyenum/errors.hpp"

namespace polyenum {

class Permutation {
public:
    // Throws validation_error unless images is a bijection on {0..n-1}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);

    // Cycle notation, e.g. "(0 1 2)(3 4)"; commas also accepted as
    // separators. Points not mentioned are fixed. "()" or an empty string
    // is the identity.
    static Permutation parse_cycles(int degree, std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[x]; }  // x^sigma
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const;
    Permutation inverse() const;

    // Disjoint cycles covering every point (fixed points included), each
    // starting at its minimum element, ordered by that minimum.
    std::vector<std::vector<int>> cycles() const;

    // Entry i-1 counts cycles of length i; sum of i*c_i equals the degree.
    std::vector<int> cycle_type() const;

    int cycle_count() const;
    int sign() const;  // (-1)^(degree - cycle_count)

    std::string cycle_string() const;  // "(0 1)(2 4 3)", "()" for identity
    std::string image_key() const;     // "1,0,2" (one-line key for tables)

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

// compose(sigma, tau) maps x to sigma(tau(x)). Under the coloring action
// act(g, f)[x] = f[g(x)] this is exactly the convention with
//   act(compose(sigma, tau), f) == act(tau, act(sigma, f)),
// which the whole library (and its tests) pin down.
Permutation compose(const Permutation& sigma, const Permutation& tau);

}  // namespace polyenum
