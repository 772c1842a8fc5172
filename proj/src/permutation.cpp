#include "polyenum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace polyenum {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
        throw validation_error("permutation of degree zero");
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size())
            throw validation_error("permutation image out of range");
        if (seen[static_cast<std::size_t>(x)])
            throw validation_error("permutation image repeated");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    if (degree < 1)
        throw validation_error("permutation degree must be positive");
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
    if (degree < 1)
        throw validation_error("permutation degree must be positive");
    std::vector<int> im(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
    std::vector<char> moved(static_cast<std::size_t>(degree), 0);

    std::size_t pos = 0;
    // Whitespace and commas are interchangeable separators.
    const auto skip_ws = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw validation_error("cycle notation: expected '('");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start)
                throw validation_error("cycle notation: expected point or ')'");
            int point = 0;
            try {
                point = std::stoi(std::string(text.substr(start, pos - start)));
            } catch (const std::exception&) {
                throw validation_error("cycle notation: point out of range");
            }
            if (point < 0 || point >= degree)
                throw validation_error("cycle notation: point out of range");
            if (moved[static_cast<std::size_t>(point)])
                throw validation_error("cycle notation: point repeated");
            moved[static_cast<std::size_t>(point)] = 1;
            cycle.push_back(point);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i];
            const int to = cycle[(i + 1) % cycle.size()];
            im[static_cast<std::size_t>(from)] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int x = static_cast<int>(start);
        do {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
            x = images_[static_cast<std::size_t>(x)];
        } while (x != static_cast<int>(start));
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> counts(images_.size(), 0);
    for (const auto& cycle : cycles())
        ++counts[cycle.size() - 1];
    return counts;
}

int Permutation::cycle_count() const {
    return static_cast<int>(cycles().size());
}

int Permutation::sign() const {
    return (degree() - cycle_count()) % 2 == 0 ? 1 : -1;
}

std::string Permutation::cycle_string() const {
    if (is_identity()) return "()";
    std::ostringstream out;
    for (const auto& cycle : cycles()) {
        if (cycle.size() == 1) continue;
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out << ' ';
            out << cycle[i];
        }
        out << ')';
    }
    return out.str();
}

std::string Permutation::image_key() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) out << ',';
        out << images_[i];
    }
    return out.str();
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.degree() != tau.degree())
        throw dimension_error("composing permutations of different degrees");
    std::vector<int> im(static_cast<std::size_t>(sigma.degree()));
    for (int x = 0; x < tau.degree(); ++x)
        im[static_cast<std::size_t>(x)] = sigma.apply(tau.apply(x));
    return Permutation(std::move(im));
}

}  // namespace polyenum
