#pragma once

// Finite permutation groups stored as explicit, sorted element lists, and
// their action on colorings (functions {0..n-1} -> {0..m-1}).

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "polyenum/permutation.hpp"

namespace polyenum {

// Default bound on |G| for generated and named groups: 10!.
inline constexpr std::uint64_t kDefaultGroupCap = 3'628'800;

class PermGroup {
public:
    // Validates the full group axioms on the explicit list: nonempty, no
    // duplicates, identity present, every pairwise composition and every
    // inverse a member. Quadratic in |G|; meant for input validation and
    // tests, not for huge groups.
    static PermGroup from_elements(int degree, std::vector<Permutation> elements);

    // Trusted constructor for callers that guarantee closure structurally
    // (generated closures, full symmetric groups, filtered subgroups).
    // Only element degrees are checked.
    static PermGroup unchecked(int degree, std::vector<Permutation> elements);

    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    bool contains(const Permutation& p) const;

private:
    PermGroup(int degree, std::vector<Permutation> elements);

    int degree_;
    std::vector<Permutation> elements_;  // sorted by image array
};

struct Coloring {
    std::vector<int> image;  // image[x] in [0, m)

    int size() const { return static_cast<int>(image.size()); }
    auto operator<=>(const Coloring&) const = default;
};

struct CompVector {
    std::vector<int> counts;  // points per color; entries sum to n

    int total() const;
    auto operator<=>(const CompVector&) const = default;
};

// f^sigma with f^sigma(x) = f(x^sigma).
Coloring act(const Permutation& sigma, const Coloring& f);

std::set<Coloring> orbit(const PermGroup& g, const Coloring& f);

PermGroup stabilizer(const PermGroup& g, const Coloring& f);

// counts[i] = |{x : f(x) = i}|. Every entry of f must lie in [0, m).
CompVector composition(const Coloring& f, int m);

// Smallest subgroup of Sym(degree) containing the generators, as an
// explicit list, by breadth-first closure under composition. Throws
// resource_error if the closure grows past cap.
PermGroup generate_group(int degree, const std::vector<Permutation>& generators,
                         std::uint64_t cap = kDefaultGroupCap);

// "sym:n" | "alt:n" | "cyclic:n" | "dihedral:n" | "trivial:n"
PermGroup named_group(const std::string& spec, std::uint64_t cap = kDefaultGroupCap);

}  // namespace polyenum
