#pragma once

// Elementary symmetric polynomials from the signed cycle-index average of
// Sym(n), and exact determinants from traces of matrix powers:
//
//   e_n(w)  = (1/n!) sum_{sigma in Sym(n)} sgn(sigma) Z(sigma, wtilde),  n <= m
//   det(L)  = (1/n!) sum_{sigma in Sym(n)} sgn(sigma) Z(sigma, t),  t_i = tr(L^i)
//
// Each formula is paired with an independent oracle (direct subset
// expansion, Bareiss elimination) so every identity is checked as an exact
// equality.

#include <cstdint>
#include <vector>

#include "polyenum/cycle_index.hpp"

namespace polyenum {

class RatMatrix {
public:
    explicit RatMatrix(int order);  // zero matrix; order >= 1

    static RatMatrix identity_matrix(int order);

    int order() const { return order_; }
    Rat& at(int row, int col);
    const Rat& at(int row, int col) const;
    Rat trace() const;
    RatMatrix operator*(const RatMatrix& rhs) const;

    bool operator==(const RatMatrix&) const = default;

private:
    int order_;
    std::vector<Rat> cells_;  // row-major
};

struct TraceVector {
    std::vector<Rat> values;  // values[i-1] = tr(L^i)
};

// t_i = tr(L^i) for i = 1..upto, by iterated exact multiplication.
TraceVector trace_powers(const RatMatrix& l, int upto);

// (1/n!) sum over Sym(n) of sgn(sigma) Z(sigma, t), collected per cycle
// type: sum over partitions of n of sign(lambda)/z_lambda * t^{c(lambda)}.
MultiPoly signed_cycle_index_polynomial(int n);

// The polynomial above with t_i replaced by the i-th power sum of w_1..w_m.
// Equals e_n(w) when n <= m; the zero polynomial when n > m.
MultiPoly signed_cycle_index_power_sum(int n, int m);

// Checked wrapper: requires 1 <= n <= m (and n <= 20).
MultiPoly elementary_symmetric_via_cycle_index(int n, int m);

// Literal signed sum over the n! elements of Sym(n); cross-check path,
// n <= 7.
MultiPoly elementary_symmetric_signed_elementwise(int n, int m);

// Oracle: sum over all n-element subsets of {w_1..w_m} of their product.
// The empty sum (n > m) is the zero polynomial.
MultiPoly elementary_symmetric_direct(int n, int m, std::uint64_t term_cap = 1'000'000);

// Evaluates the signed cycle-index polynomial at the trace vector of L.
// Exact, and always equal to det_bareiss. Requires order <= 20.
Rat det_via_traces(const RatMatrix& l);

// Independent determinant oracle: rows are scaled to integers, then
// fraction-free Bareiss elimination with row pivoting runs over exact
// integers. A column with no usable pivot means determinant zero.
Rat det_bareiss(const RatMatrix& l);

}  // namespace polyenum
