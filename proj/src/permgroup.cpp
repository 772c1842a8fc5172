#include "polyenum/permgroup.hpp"

#include <algorithm>

#include "polyenum/rat.hpp"
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace polyenum {

PermGroup::PermGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

PermGroup PermGroup::trivial(int degree) {
    std::vector<Permutation> els;
    els.push_back(Permutation::identity(degree));
    return PermGroup(degree, std::move(els));
}

PermGroup PermGroup::unchecked(int degree, std::vector<Permutation> elements) {
    if (degree < 1)
        throw validation_error("group degree must be positive");
    if (elements.empty())
        throw validation_error("group must contain the identity");
    for (const auto& p : elements)
        if (p.degree() != degree)
            throw dimension_error("group element has wrong degree");
    return PermGroup(degree, std::move(elements));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
    if (degree < 1)
        throw validation_error("group degree must be positive");
    for (const auto& p : elements)
        if (p.degree() != degree)
            throw dimension_error("group element has wrong degree");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw validation_error("group element listed twice");
    const auto member = [&](const Permutation& p) {
        return std::binary_search(elements.begin(), elements.end(), p);
    };
    if (!member(Permutation::identity(degree)))
        throw validation_error("group must contain the identity");
    for (const auto& a : elements) {
        if (!member(a.inverse()))
            throw validation_error("group is not closed under inverses");
        for (const auto& b : elements)
            if (!member(compose(a, b)))
                throw validation_error("group is not closed under composition");
    }
    return PermGroup(degree, std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

Coloring act(const Permutation& sigma, const Coloring& f) {
    if (static_cast<std::size_t>(sigma.degree()) != f.image.size())
        throw dimension_error("coloring and permutation have different degrees");
    Coloring out;
    out.image.resize(f.image.size());
    for (int x = 0; x < sigma.degree(); ++x)
        out.image[static_cast<std::size_t>(x)] =
            f.image[static_cast<std::size_t>(sigma.apply(x))];
    return out;
}

std::set<Coloring> orbit(const PermGroup& g, const Coloring& f) {
    std::set<Coloring> out;
    for (const auto& sigma : g.elements()) out.insert(act(sigma, f));
    return out;
}

PermGroup stabilizer(const PermGroup& g, const Coloring& f) {
    std::vector<Permutation> fixed;
    for (const auto& sigma : g.elements())
        if (act(sigma, f) == f) fixed.push_back(sigma);
    return PermGroup::unchecked(g.degree(), std::move(fixed));
}

CompVector composition(const Coloring& f, int color_count) {
    if (color_count < 1)
        throw validation_error("color count must be positive");
    CompVector out;
    out.counts.assign(static_cast<std::size_t>(color_count), 0);
    for (int c : f.image) {
        if (c < 0 || c >= color_count)
            throw range_error("coloring uses a color outside the palette");
        ++out.counts[static_cast<std::size_t>(c)];
    }
    return out;
}

int CompVector::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

PermGroup generate_group(int degree, const std::vector<Permutation>& generators,
                         std::uint64_t cap) {
    if (degree < 1)
        throw validation_error("group degree must be positive");
    for (const auto& p : generators)
        if (p.degree() != degree)
            throw dimension_error("generator has wrong degree");

    std::set<Permutation> closed;
    std::deque<Permutation> frontier;
    const auto push = [&](const Permutation& p) {
        if (closed.insert(p).second) {
            if (closed.size() > cap)
                throw resource_error("generated group exceeds the element cap");
            frontier.push_back(p);
        }
    };
    push(Permutation::identity(degree));
    while (!frontier.empty()) {
        const Permutation current = frontier.front();
        frontier.pop_front();
        for (const auto& gen : generators) push(compose(current, gen));
    }
    return PermGroup::unchecked(degree,
                                std::vector<Permutation>(closed.begin(), closed.end()));
}

namespace {

// Splits "name:n" into its two halves; the degree part must be a positive
// decimal integer.
std::pair<std::string, int> split_named(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw validation_error("named group must look like 'sym:4'");
    const std::string name = spec.substr(0, colon);
    const std::string num = spec.substr(colon + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
        throw validation_error("named group degree must be a positive integer");
    int n = 0;
    try {
        n = std::stoi(num);
    } catch (const std::exception&) {
        throw validation_error("named group degree out of range");
    }
    if (n < 1)
        throw validation_error("named group degree must be a positive integer");
    return {name, n};
}

std::vector<Permutation> symmetric_elements(int n, std::uint64_t cap) {
    Int order = factorial(static_cast<unsigned>(n));
    if (order > Int(cap))
        throw resource_error("symmetric group exceeds the element cap");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace

PermGroup named_group(const std::string& spec, std::uint64_t cap) {
    const auto [name, n] = split_named(spec);
    if (name == "trivial") {
        return PermGroup::trivial(n);
    }
    if (name == "sym") {
        return PermGroup::unchecked(n, symmetric_elements(n, cap));
    }
    if (name == "alt") {
        auto all = symmetric_elements(n, cap);
        std::vector<Permutation> even;
        for (auto& p : all)
            if (p.sign() == 1) even.push_back(std::move(p));
        return PermGroup::unchecked(n, std::move(even));
    }
    if (name == "cyclic") {
        std::vector<Permutation> els;
        for (int k = 0; k < n; ++k) {
            std::vector<int> im(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x) im[static_cast<std::size_t>(x)] = (x + k) % n;
            els.emplace_back(std::move(im));
        }
        return PermGroup::unchecked(n, std::move(els));
    }
    if (name == "dihedral") {
        if (n == 1) return PermGroup::trivial(1);
        std::vector<int> rot(static_cast<std::size_t>(n));
        std::vector<int> ref(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            rot[static_cast<std::size_t>(x)] = (x + 1) % n;
            ref[static_cast<std::size_t>(x)] = n - 1 - x;
        }
        return generate_group(n, {Permutation(rot), Permutation(ref)}, cap);
    }
    throw validation_error("unknown named group '" + name + "'");
}

}  // namespace polyenum
