#include "polyenum/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polyenum {

unsigned total_degree(const Monomial& exponents) {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

bool GradedLexDesc::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(std::size_t var_count) : var_count_(var_count) {}

MultiPoly MultiPoly::zero(std::size_t var_count) {
    return MultiPoly(var_count);
}

MultiPoly MultiPoly::one(std::size_t var_count) {
    return constant(var_count, Rat(1));
}

MultiPoly MultiPoly::constant(std::size_t var_count, Rat value) {
    MultiPoly p(var_count);
    p.add_term(Monomial(var_count, 0), value);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t var_count, std::size_t index) {
    if (index >= var_count)
        throw dimension_error("variable index out of range");
    Monomial m(var_count, 0);
    m[index] = 1;
    return monomial(var_count, std::move(m), Rat(1));
}

MultiPoly MultiPoly::monomial(std::size_t var_count, Monomial exponents, Rat coefficient) {
    if (exponents.size() != var_count)
        throw dimension_error("monomial arity does not match variable count");
    MultiPoly p(var_count);
    p.add_term(exponents, coefficient);
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t var_count,
                                const std::vector<std::pair<Monomial, Rat>>& terms) {
    MultiPoly p(var_count);
    for (const auto& [m, c] : terms) {
        if (m.size() != var_count)
            throw dimension_error("monomial arity does not match variable count");
        p.add_term(m, c);
    }
    return p;
}

Rat MultiPoly::coefficient(const Monomial& exponents) const {
    if (exponents.size() != var_count_)
        throw dimension_error("monomial arity does not match variable count");
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MultiPoly::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

bool MultiPoly::is_homogeneous(unsigned deg) const {
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != deg) return false;
    return true;
}

void MultiPoly::add_term(const Monomial& exponents, const Rat& coefficient) {
    if (coefficient == 0) return;
    const auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::require_same_shape(const MultiPoly& other) const {
    if (var_count_ != other.var_count_)
        throw dimension_error("polynomials have different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    require_same_shape(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    require_same_shape(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    require_same_shape(rhs);
    MultiPoly product(var_count_);
    Monomial m(var_count_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < var_count_; ++i) m[i] = ma[i] + mb[i];
            product.add_term(m, ca * cb);
        }
    }
    *this = std::move(product);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(var_count_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = one(var_count_);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != var_count_)
        throw dimension_error("substitution needs one polynomial per variable");
    const std::size_t out_vars = images.empty() ? 0 : images.front().var_count();
    for (const auto& img : images)
        if (img.var_count() != out_vars)
            throw dimension_error("substitution images have mixed variable counts");

    // Cache successive powers of each image: cycle-index substitutions hit
    // the same small exponents across many terms.
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(one(out_vars));

    MultiPoly result = zero(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = constant(out_vars, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto& cache = powers[i];
            while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
            term *= cache[m[i]];
        }
        result += term;
    }
    return result;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != var_count_)
        throw dimension_error("evaluation needs one value per variable");
    Rat result(0);
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
        result += term;
    }
    return result;
}

std::string MultiPoly::to_text(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat coeff = c;
        if (first) {
            if (coeff < 0) {
                out << '-';
                coeff = -coeff;
            }
            first = false;
        } else if (coeff < 0) {
            out << " - ";
            coeff = -coeff;
        } else {
            out << " + ";
        }
        const bool has_vars = total_degree(m) > 0;
        const bool unit = coeff == 1;
        // A unit coefficient on a non-constant term contributes no "1*".
        if (!unit || !has_vars) out << rat_to_string(coeff);
        bool emitted = !unit || !has_vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (emitted) out << '*';
            out << var_prefix << (i + 1);
            if (m[i] > 1) out << '^' << m[i];
            emitted = true;
        }
    }
    return out.str();
}

}  // namespace polyenum
