#include "polyenum/symdet.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace polyenum {

RatMatrix::RatMatrix(int order) : order_(order) {
    if (order < 1)
        throw validation_error("matrix order must be positive");
    cells_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order),
                  Rat(0));
}

RatMatrix RatMatrix::identity_matrix(int order) {
    RatMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
}

Rat& RatMatrix::at(int row, int col) {
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
        throw range_error("matrix index out of range");
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(col)];
}

const Rat& RatMatrix::at(int row, int col) const {
    if (row < 0 || row >= order_ || col < 0 || col >= order_)
        throw range_error("matrix index out of range");
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(col)];
}

Rat RatMatrix::trace() const {
    Rat t(0);
    for (int i = 0; i < order_; ++i) t += at(i, i);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (order_ != rhs.order_)
        throw dimension_error("multiplying matrices of different orders");
    RatMatrix out(order_);
    for (int i = 0; i < order_; ++i)
        for (int k = 0; k < order_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < order_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

TraceVector trace_powers(const RatMatrix& l, int upto) {
    if (upto < 1)
        throw validation_error("need at least one trace power");
    TraceVector t;
    t.values.reserve(static_cast<std::size_t>(upto));
    RatMatrix power = l;
    t.values.push_back(power.trace());
    for (int i = 2; i <= upto; ++i) {
        power = power * l;
        t.values.push_back(power.trace());
    }
    return t;
}

MultiPoly signed_cycle_index_polynomial(int n) {
    if (n < 1 || n > kMaxPartitionDegree)
        throw range_error("signed cycle index degree out of range");
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(n));
    for (const auto& lambda : partitions(n)) {
        const auto counts = lambda.multiplicities();
        Monomial m(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < counts.size(); ++i)
            m[i] = static_cast<unsigned>(counts[i]);
        sum += MultiPoly::monomial(static_cast<std::size_t>(n), std::move(m),
                                   make_rat(lambda.sign(), lambda.centralizer_order()));
    }
    return sum;
}

MultiPoly signed_cycle_index_power_sum(int n, int m) {
    if (m < 1)
        throw validation_error("need at least one weight variable");
    return signed_cycle_index_polynomial(n).substitute(power_sum_polys(m, n));
}

MultiPoly elementary_symmetric_via_cycle_index(int n, int m) {
    if (n < 1)
        throw validation_error("elementary symmetric index must be positive");
    if (m < 1)
        throw validation_error("need at least one weight variable");
    if (n > m)
        throw range_error("elementary symmetric index exceeds the variable count");
    return signed_cycle_index_power_sum(n, m);
}

MultiPoly elementary_symmetric_signed_elementwise(int n, int m) {
    if (n < 1 || n > 7)
        throw range_error("elementwise signed sum limited to degree 7");
    if (m < 1)
        throw validation_error("need at least one weight variable");
    const auto g = named_group("sym:" + std::to_string(n));
    const auto psums = power_sum_polys(m, n);
    // Collect the signed sum in t first so a single substitution does the
    // expansion work once per cycle type, then divide by n!.
    MultiPoly signed_sum = MultiPoly::zero(static_cast<std::size_t>(n));
    for (const auto& sigma : g.elements())
        signed_sum += Rat(sigma.sign()) * cycle_index_monomial(sigma);
    MultiPoly expanded = signed_sum.substitute(psums);
    expanded *= make_rat(1, factorial(static_cast<unsigned>(n)));
    return expanded;
}

MultiPoly elementary_symmetric_direct(int n, int m, std::uint64_t term_cap) {
    if (n < 0)
        throw validation_error("elementary symmetric index must be nonnegative");
    if (m < 1)
        throw validation_error("need at least one weight variable");
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(m));
    if (n == 0) return MultiPoly::one(static_cast<std::size_t>(m));
    if (n > m) return sum;  // empty sum of subsets
    if (binomial(static_cast<unsigned>(m), static_cast<unsigned>(n)) > Int(term_cap))
        throw resource_error("subset expansion exceeds the term cap");
    // Walk n-element subsets of {0..m-1} in lexicographic order.
    std::vector<int> subset(static_cast<std::size_t>(n));
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        Monomial mono(static_cast<std::size_t>(m), 0);
        for (int j : subset) mono[static_cast<std::size_t>(j)] = 1;
        sum += MultiPoly::monomial(static_cast<std::size_t>(m), std::move(mono), Rat(1));
        int i = n - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - n + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    return sum;
}

Rat det_via_traces(const RatMatrix& l) {
    const int n = l.order();
    if (n > kMaxPartitionDegree)
        throw range_error("trace-power determinant limited to order 20");
    const auto t = trace_powers(l, n);
    return signed_cycle_index_polynomial(n).eval(t.values);
}

Rat det_bareiss(const RatMatrix& l) {
    const int n = l.order();
    // Clear denominators per row; det scales by the product of the factors.
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n)));
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int lcm = 1;
        for (int j = 0; j < n; ++j) {
            const Int den = denominator(l.at(i, j));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        scale *= lcm;
        for (int j = 0; j < n; ++j) {
            const Rat scaled = l.at(i, j) * Rat(lcm);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                numerator(scaled);
        }
    }

    // Fraction-free elimination: every division below is exact.
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Rat(0);  // singular
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                            a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                            a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v / prev;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Int det = a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) det = -det;
    return make_rat(std::move(det), std::move(scale));
}

}  // namespace polyenum
