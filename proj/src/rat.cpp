#include "polyenum/rat.hpp"

#include <cctype>

namespace polyenum {

namespace {

Int parse_int(std::string_view text) {
    if (text.empty())
        throw validation_error("empty integer literal");
    try {
        return Int(std::string(text));
    } catch (const std::exception&) {
        throw validation_error("bad integer literal: '" + std::string(text) + "'");
    }
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rat make_rat(Int num, Int den) {
    if (den == 0)
        throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));  // reduces to lowest terms
}

Rat parse_rat(std::string_view text) {
    const auto s = trimmed(text);
    if (s.empty())
        throw validation_error("empty rational literal");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(s));
    if (s.find('/', slash + 1) != std::string_view::npos)
        throw validation_error("bad rational literal: '" + std::string(text) + "'");
    return make_rat(parse_int(trimmed(s.substr(0, slash))),
                    parse_int(trimmed(s.substr(slash + 1))));
}

std::string rat_to_string(const Rat& r) {
    return r.str();  // "p" or "p/q" with q > 1
}

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

}  // namespace polyenum
