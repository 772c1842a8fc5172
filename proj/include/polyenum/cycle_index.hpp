#pragma once

// Cycle index machinery: the per-element monomial Z(sigma, t) =
// t_1^{c_1} ... t_n^{c_n}, the group average Z_G, integer partitions as
// cycle types of Sym(n), and power-sum vectors (sum_i w_i, sum_i w_i^2, ...).

#include <vector>

#include "polyenum/multipoly.hpp"
#include "polyenum/permgroup.hpp"

namespace polyenum {

// Partition-indexed sums stay desk-scale up to here (p(20) = 627).
inline constexpr int kMaxPartitionDegree = 20;

struct IntPartition {
    std::vector<int> parts;  // weakly decreasing positive integers

    int sum() const;
    int count() const { return static_cast<int>(parts.size()); }

    // c_i = number of parts equal to i, as a vector of length sum().
    std::vector<int> multiplicities() const;

    // Size of the conjugacy class of Sym(n) with this cycle type:
    // n! / prod_i (i^{c_i} c_i!).
    Int symmetric_class_size() const;

    // prod_i (i^{c_i} c_i!), the centralizer order.
    Int centralizer_order() const;

    int sign() const;  // (-1)^(n - number of parts)
};

// All partitions of n, largest part first, listed in descending
// lexicographic order: [n], [n-1,1], ..., [1,...,1]. Requires 1 <= n <= 20.
std::vector<IntPartition> partitions(int n);

struct CycleIndex {
    int degree = 0;   // n; poly lives in t_1..t_n
    MultiPoly poly;

    // Validates the weighted-degree invariant: every stored monomial
    // t^c has sum_i i*c_i == degree.
    static CycleIndex from_poly(int degree, MultiPoly poly);

    bool operator==(const CycleIndex&) const = default;
};

// Z(sigma, t): the single monomial prod_i t_i^{c_i(sigma)} with coefficient 1.
MultiPoly cycle_index_monomial(const Permutation& sigma);

// Z_G(t) = (1/|G|) sum over elements of Z(sigma, t); coefficients sum to 1.
CycleIndex cycle_index(const PermGroup& g);

// Same polynomial as cycle_index of the full symmetric group, computed by
// summing 1/prod(i^{c_i} c_i!) * t^c over the partitions of n instead of
// over the n! elements. Requires 1 <= n <= 20.
CycleIndex cycle_index_symmetric(int n);

// Entry j-1 is sum_{i=1..m} w_i^j as a polynomial in m variables.
std::vector<MultiPoly> power_sum_polys(int m, int n);

// The same vector evaluated at numeric weights (m = weights.size()); the
// symbolic polynomials are built and evaluated, there is no second code path.
std::vector<Rat> power_sum_values(const std::vector<Rat>& weights, int n);

}  // namespace polyenum
