#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// A polynomial lives in a fixed number of variables; each term maps an
// exponent vector of that length to a nonzero rational coefficient. Terms
// are held in graded-lex descending order (total degree first, then
// lexicographic comparison of the exponent vectors), so iteration and
// serialization are canonical without a separate sort step.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyenum/rat.hpp"

namespace polyenum {

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& exponents);

// Descending total degree, ties broken by descending lex on exponents.
struct GradedLexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GradedLexDesc>;

    MultiPoly() : MultiPoly(0) {}               // zero in no variables
    explicit MultiPoly(std::size_t var_count);  // the zero polynomial

    static MultiPoly zero(std::size_t var_count);
    static MultiPoly one(std::size_t var_count);
    static MultiPoly constant(std::size_t var_count, Rat value);
    static MultiPoly variable(std::size_t var_count, std::size_t index);
    static MultiPoly monomial(std::size_t var_count, Monomial exponents, Rat coefficient);
    // Accumulates the given terms (repeated exponent vectors add up).
    static MultiPoly from_terms(std::size_t var_count,
                                const std::vector<std::pair<Monomial, Rat>>& terms);

    std::size_t var_count() const { return var_count_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Monomial& exponents) const;  // 0 when absent
    unsigned degree() const;  // max total degree; 0 for the zero polynomial
    bool is_homogeneous(unsigned deg) const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rat& scalar);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { a *= b; return a; }
    friend MultiPoly operator*(MultiPoly a, const Rat& s) { a *= s; return a; }
    friend MultiPoly operator*(const Rat& s, MultiPoly a) { a *= s; return a; }

    MultiPoly pow(unsigned exponent) const;  // repeated squaring; p^0 = 1

    // Replaces variable i by images[i] and expands fully. All images must
    // share one variable count, which becomes the result's.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    Rat eval(const std::vector<Rat>& point) const;

    // Canonical text, e.g. "1/2*t1^2 + 1/2*t2": terms in graded-lex
    // descending order, "p/q" coefficients ("/q" dropped when q=1, "1*"
    // dropped entirely), variables named prefix1..prefixN.
    std::string to_text(const std::string& var_prefix) const;

    bool operator==(const MultiPoly&) const = default;

private:
    void add_term(const Monomial& exponents, const Rat& coefficient);
    void require_same_shape(const MultiPoly& other) const;

    std::size_t var_count_;
    TermMap terms_;
};

}  // namespace polyenum
