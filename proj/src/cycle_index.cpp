#include "polyenum/cycle_index.hpp"

#include <algorithm>

namespace polyenum {

int IntPartition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<int> IntPartition::multiplicities() const {
    std::vector<int> counts(static_cast<std::size_t>(sum()), 0);
    for (int p : parts) ++counts[static_cast<std::size_t>(p - 1)];
    return counts;
}

Int IntPartition::centralizer_order() const {
    // z_lambda = prod_i i^{c_i} * c_i!  where c_i counts parts of size i.
    Int z = 1;
    const auto counts = multiplicities();
    for (std::size_t i = 0; i < counts.size(); ++i) {
        for (int k = 0; k < counts[i]; ++k) z *= Int(i + 1);
        z *= factorial(static_cast<unsigned>(counts[i]));
    }
    return z;
}

Int IntPartition::symmetric_class_size() const {
    return factorial(static_cast<unsigned>(sum())) / centralizer_order();
}

int IntPartition::sign() const {
    // Each part of size i contributes i-1 transpositions.
    return (sum() - count()) % 2 == 0 ? 1 : -1;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.push_back(IntPartition{prefix});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> partitions(int n) {
    if (n < 1 || n > kMaxPartitionDegree)
        throw range_error("partition degree out of range");
    std::vector<IntPartition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

CycleIndex CycleIndex::from_poly(int degree, MultiPoly poly) {
    if (degree < 1)
        throw validation_error("cycle index degree must be positive");
    if (poly.var_count() != static_cast<std::size_t>(degree))
        throw dimension_error("cycle index needs one variable per cycle length");
    for (const auto& [m, c] : poly.terms()) {
        int weighted = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            weighted += static_cast<int>(i + 1) * static_cast<int>(m[i]);
        if (weighted != degree)
            throw validation_error("cycle index term does not weight to the degree");
    }
    CycleIndex z;
    z.degree = degree;
    z.poly = std::move(poly);
    return z;
}

MultiPoly cycle_index_monomial(const Permutation& sigma) {
    const auto counts = sigma.cycle_type();
    Monomial m(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        m[i] = static_cast<unsigned>(counts[i]);
    const std::size_t arity = m.size();
    return MultiPoly::monomial(arity, std::move(m), Rat(1));
}

CycleIndex cycle_index(const PermGroup& g) {
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(g.degree()));
    for (const auto& sigma : g.elements()) sum += cycle_index_monomial(sigma);
    sum *= make_rat(1, Int(g.order()));
    return CycleIndex::from_poly(g.degree(), std::move(sum));
}

CycleIndex cycle_index_symmetric(int n) {
    if (n < 1 || n > kMaxPartitionDegree)
        throw range_error("symmetric cycle index degree out of range");
    // One term per conjugacy class: |class|/n! = 1/z_lambda.
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(n));
    for (const auto& lambda : partitions(n)) {
        const auto counts = lambda.multiplicities();
        Monomial m(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < counts.size(); ++i)
            m[i] = static_cast<unsigned>(counts[i]);
        sum += MultiPoly::monomial(static_cast<std::size_t>(n), std::move(m),
                                   make_rat(1, lambda.centralizer_order()));
    }
    return CycleIndex::from_poly(n, std::move(sum));
}

std::vector<MultiPoly> power_sum_polys(int m, int n) {
    if (m < 1)
        throw validation_error("need at least one weight variable");
    if (n < 1)
        throw validation_error("need at least one power sum");
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        MultiPoly p = MultiPoly::zero(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            Monomial mono(static_cast<std::size_t>(m), 0);
            mono[static_cast<std::size_t>(j)] = static_cast<unsigned>(i);
            p += MultiPoly::monomial(static_cast<std::size_t>(m), std::move(mono), Rat(1));
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Rat> power_sum_values(const std::vector<Rat>& weights, int n) {
    if (weights.empty())
        throw validation_error("need at least one weight");
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(n));
    for (const auto& p : power_sum_polys(static_cast<int>(weights.size()), n))
        out.push_back(p.eval(weights));
    return out;
}

}  // namespace polyenum
