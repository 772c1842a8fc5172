#pragma once

// Weighted enumeration under a group action: the classical cycle-index
// generating function, its delta-weighted generalization, and brute-force
// oracles that recompute each side of the identities independently.
//
// The identity both oracles check, for any weight function Delta on G:
//
//   sum_k ( sum_{f: W(f)=w^k} sum_{sigma in G_f} Delta(sigma) ) w^k
//     = sum_{sigma in G} Delta(sigma) Z(sigma, wtilde)
//
// where w^k ranges over degree-n monomials in w_1..w_m and wtilde is the
// power-sum vector. Delta = 1/|G| specializes the left side to orbit counts.

#include <cstdint>
#include <map>
#include <vector>

#include "polyenum/cycle_index.hpp"

namespace polyenum {

struct Caps {
    std::uint64_t max_colorings = 1'000'000;     // bound on m^n sweeps
    std::uint64_t max_operations = 100'000'000;  // bound on |G| * m^n work
};

// A rational weight per group element. The built-in kinds are averaged over
// the group: uniform is 1/|G| and sign is sgn(sigma)/|G|, so uniform
// reproduces plain orbit counting and sign reproduces the elementary
// symmetric polynomial when G = Sym(n). Table entries are raw values keyed
// by image array and must cover every element of the target group.
class DeltaWeight {
public:
    enum class Kind { uniform, sign, table };

    static DeltaWeight uniform();
    static DeltaWeight sign();
    static DeltaWeight table(std::map<std::vector<int>, Rat> values);

    Kind kind() const { return kind_; }
    const std::map<std::vector<int>, Rat>& entries() const { return table_; }

    // Delta(sigma). Table lookups throw validation_error when the element
    // is missing.
    Rat value(const Permutation& sigma, std::size_t group_order) const;

    // For tables: every element of g must have an entry.
    void check_covers(const PermGroup& g) const;

    std::string describe() const;  // "uniform", "sign", "table{0,1=1; ...}"

private:
    DeltaWeight(Kind kind, std::map<std::vector<int>, Rat> table);

    Kind kind_;
    std::map<std::vector<int>, Rat> table_;
};

// Homogeneous degree-n generating function in w_1..w_m.
struct GenFunction {
    int degree = 0;  // n: the total degree of every term
    MultiPoly poly;

    // Validates homogeneity of the given polynomial.
    static GenFunction from_poly(int degree, MultiPoly poly);

    bool operator==(const GenFunction&) const = default;
};

// Z_G evaluated at the power-sum vector in m colors; coefficients are the
// orbit counts per composition.
GenFunction polya_enumerate(const PermGroup& g, int m);

// sum over sigma in G of Delta(sigma) * Z(sigma, wtilde). With the uniform
// kind this equals polya_enumerate exactly.
GenFunction extended_enumerate(const PermGroup& g, const DeltaWeight& delta, int m);

// Left-hand side by brute force over all m^n colorings: each coloring
// contributes (sum of Delta over its stabilizer) to the monomial of its
// composition.
GenFunction lhs_stabilizer_oracle(const PermGroup& g, const DeltaWeight& delta, int m,
                                  const Caps& caps = {});

// Left-hand side via ordered set partitions: for each composition k and
// each ordered partition of the points into blocks of sizes k, sum Delta
// over the group elements preserving every block.
GenFunction lhs_partition_oracle(const PermGroup& g, const DeltaWeight& delta, int m,
                                 const Caps& caps = {});

// All colorings constant on each cycle of sigma; m^(cycle count) of them.
std::vector<Coloring> fixed_colorings(const Permutation& sigma, int m,
                                      const Caps& caps = {});

struct FixedColoringCheck {
    bool equal = false;
    MultiPoly lhs;  // sum of W(f) over colorings fixed by sigma
    MultiPoly rhs;  // Z(sigma, wtilde)
};

// Checks sum_{f in F_sigma} W(f) == Z(sigma, wtilde) and returns both sides.
FixedColoringCheck fixed_coloring_check(const Permutation& sigma, int m, const Caps& caps = {});

// Brute-force orbit partition of all m^n colorings, counted per composition
// vector. Goes through act() only; independent of every cycle-index path.
std::map<CompVector, std::uint64_t> orbit_census(const PermGroup& g, int m,
                                                 const Caps& caps = {});

}  // namespace polyenum
