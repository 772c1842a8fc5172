#include "polyenum/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace polyenum {

DeltaWeight::DeltaWeight(Kind kind, std::map<std::vector<int>, Rat> table)
    : kind_(kind), table_(std::move(table)) {}

DeltaWeight DeltaWeight::uniform() {
    return DeltaWeight(Kind::uniform, {});
}

DeltaWeight DeltaWeight::sign() {
    return DeltaWeight(Kind::sign, {});
}

DeltaWeight DeltaWeight::table(std::map<std::vector<int>, Rat> values) {
    if (values.empty())
        throw validation_error("delta table is empty");
    const std::size_t degree = values.begin()->first.size();
    for (const auto& [images, v] : values) {
        if (images.size() != degree)
            throw dimension_error("delta table keys have mixed degrees");
        Permutation check(images);  // rejects non-bijections
        (void)check;
    }
    return DeltaWeight(Kind::table, std::move(values));
}

Rat DeltaWeight::value(const Permutation& sigma, std::size_t group_order) const {
    switch (kind_) {
        case Kind::uniform:
            if (group_order == 0)
                throw validation_error("delta needs a nonempty group");
            return make_rat(1, Int(group_order));
        case Kind::sign:
            if (group_order == 0)
                throw validation_error("delta needs a nonempty group");
            return make_rat(sigma.sign(), Int(group_order));
        case Kind::table: {
            const auto it = table_.find(sigma.images());
            if (it == table_.end())
                throw validation_error("delta table has no entry for " + sigma.image_key());
            return it->second;
        }
    }
    throw validation_error("unreachable delta kind");
}

void DeltaWeight::check_covers(const PermGroup& g) const {
    if (kind_ != Kind::table) return;
    for (const auto& sigma : g.elements())
        if (table_.find(sigma.images()) == table_.end())
            throw validation_error("delta table has no entry for " + sigma.image_key());
}

std::string DeltaWeight::describe() const {
    switch (kind_) {
        case Kind::uniform:
            return "uniform";
        case Kind::sign:
            return "sign";
        case Kind::table: {
            std::ostringstream out;
            out << "table{";
            bool first = true;
            for (const auto& [images, v] : table_) {
                if (!first) out << "; ";
                first = false;
                for (std::size_t i = 0; i < images.size(); ++i) {
                    if (i > 0) out << ',';
                    out << images[i];
                }
                out << '=' << rat_to_string(v);
            }
            out << '}';
            return out.str();
        }
    }
    return "?";
}

GenFunction GenFunction::from_poly(int degree, MultiPoly poly) {
    if (degree < 0)
        throw validation_error("generating function degree must be nonnegative");
    if (!poly.is_homogeneous(static_cast<unsigned>(degree)))
        throw validation_error("generating function is not homogeneous of its degree");
    GenFunction f;
    f.degree = degree;
    f.poly = std::move(poly);
    return f;
}

namespace {

// Total coloring count m^n, with the cap checks every exhaustive sweep
// shares. Returns m^n, which is guaranteed to fit by the first check.
std::uint64_t require_sweep_fits(int n, int m, std::size_t group_order, const Caps& caps) {
    if (m < 1)
        throw validation_error("color count must be positive");
    Int total = 1;
    for (int i = 0; i < n; ++i) {
        total *= m;
        if (total > Int(caps.max_colorings))
            throw resource_error("coloring sweep exceeds the cap");
    }
    const auto colorings = total.convert_to<std::uint64_t>();
    if (Int(group_order) * total > Int(caps.max_operations))
        throw resource_error("group-times-coloring sweep exceeds the cap");
    return colorings;
}

// Calls visit(f) for every f in {0..m-1}^n in lexicographic order.
template <typename Visit>
void for_each_coloring(int n, int m, Visit&& visit) {
    Coloring f;
    f.image.assign(static_cast<std::size_t>(n), 0);
    for (;;) {
        visit(f);
        int i = n - 1;
        while (i >= 0 && f.image[static_cast<std::size_t>(i)] == m - 1) {
            f.image[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++f.image[static_cast<std::size_t>(i)];
    }
}

Monomial monomial_of(const CompVector& k) {
    Monomial m(k.counts.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = static_cast<unsigned>(k.counts[i]);
    return m;
}

// All vectors of m nonnegative counts summing to n, lexicographically.
void for_each_composition(int n, int m, std::vector<int>& prefix,
                          const std::function<void(const CompVector&)>& visit) {
    if (static_cast<int>(prefix.size()) == m - 1) {
        int used = 0;
        for (int c : prefix) used += c;
        prefix.push_back(n - used);
        CompVector k;
        k.counts = prefix;
        visit(k);
        prefix.pop_back();
        return;
    }
    int used = 0;
    for (int c : prefix) used += c;
    for (int c = 0; c <= n - used; ++c) {
        prefix.push_back(c);
        for_each_composition(n, m, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace

GenFunction polya_enumerate(const PermGroup& g, int m) {
    if (m < 1)
        throw validation_error("color count must be positive");
    const auto z = cycle_index(g);
    return GenFunction::from_poly(
        g.degree(), z.poly.substitute(power_sum_polys(m, g.degree())));
}

GenFunction extended_enumerate(const PermGroup& g, const DeltaWeight& delta, int m) {
    if (m < 1)
        throw validation_error("color count must be positive");
    delta.check_covers(g);
    // Accumulate sum over sigma of Delta(sigma) t^{c(sigma)} first; the sum
    // collapses onto the few distinct cycle types, so one substitution
    // expands everything.
    MultiPoly weighted = MultiPoly::zero(static_cast<std::size_t>(g.degree()));
    for (const auto& sigma : g.elements())
        weighted += delta.value(sigma, g.order()) * cycle_index_monomial(sigma);
    return GenFunction::from_poly(
        g.degree(), weighted.substitute(power_sum_polys(m, g.degree())));
}

GenFunction lhs_stabilizer_oracle(const PermGroup& g, const DeltaWeight& delta, int m,
                                  const Caps& caps) {
    delta.check_covers(g);
    require_sweep_fits(g.degree(), m, g.order(), caps);
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(m));
    for_each_coloring(g.degree(), m, [&](const Coloring& f) {
        Rat stab_weight(0);
        for (const auto& sigma : g.elements())
            if (act(sigma, f) == f) stab_weight += delta.value(sigma, g.order());
        if (stab_weight != 0)
            sum += MultiPoly::monomial(static_cast<std::size_t>(m),
                                       monomial_of(composition(f, m)), stab_weight);
    });
    return GenFunction::from_poly(g.degree(), std::move(sum));
}

GenFunction lhs_partition_oracle(const PermGroup& g, const DeltaWeight& delta, int m,
                                 const Caps& caps) {
    delta.check_covers(g);
    require_sweep_fits(g.degree(), m, g.order(), caps);
    const int n = g.degree();
    MultiPoly sum = MultiPoly::zero(static_cast<std::size_t>(m));
    std::vector<int> prefix;
    for_each_composition(n, m, prefix, [&](const CompVector& k) {
        // Colorings with composition k are the distinct rearrangements of
        // the sorted color word 0^{k_0} 1^{k_1} ...; each one is an ordered
        // partition of the points into blocks of sizes k.
        Coloring f;
        for (int color = 0; color < m; ++color)
            f.image.insert(f.image.end(), static_cast<std::size_t>(k.counts[color]), color);
        Rat class_weight(0);
        do {
            // Sum Delta over elements mapping every block onto itself:
            // sigma preserves the partition iff colors are constant along
            // its point movement.
            for (const auto& sigma : g.elements()) {
                bool preserves = true;
                for (int x = 0; x < n && preserves; ++x)
                    preserves = f.image[static_cast<std::size_t>(sigma.apply(x))] ==
                                f.image[static_cast<std::size_t>(x)];
                if (preserves) class_weight += delta.value(sigma, g.order());
            }
        } while (std::next_permutation(f.image.begin(), f.image.end()));
        if (class_weight != 0)
            sum += MultiPoly::monomial(static_cast<std::size_t>(m), monomial_of(k),
                                       class_weight);
    });
    return GenFunction::from_poly(n, std::move(sum));
}

std::vector<Coloring> fixed_colorings(const Permutation& sigma, int m, const Caps& caps) {
    if (m < 1)
        throw validation_error("color count must be positive");
    const auto cycles = sigma.cycles();
    require_sweep_fits(static_cast<int>(cycles.size()), m, 1, caps);
    // One free color per cycle; spread it over the cycle's points.
    std::vector<Coloring> out;
    for_each_coloring(static_cast<int>(cycles.size()), m, [&](const Coloring& choice) {
        Coloring f;
        f.image.assign(static_cast<std::size_t>(sigma.degree()), 0);
        for (std::size_t c = 0; c < cycles.size(); ++c)
            for (int x : cycles[c]) f.image[static_cast<std::size_t>(x)] = choice.image[c];
        out.push_back(std::move(f));
    });
    return out;
}

FixedColoringCheck fixed_coloring_check(const Permutation& sigma, int m, const Caps& caps) {
    FixedColoringCheck r;
    r.lhs = MultiPoly::zero(static_cast<std::size_t>(m));
    for (const auto& f : fixed_colorings(sigma, m, caps))
        r.lhs += MultiPoly::monomial(static_cast<std::size_t>(m),
                                     monomial_of(composition(f, m)), Rat(1));
    r.rhs = cycle_index_monomial(sigma).substitute(power_sum_polys(m, sigma.degree()));
    r.equal = r.lhs == r.rhs;
    return r;
}

std::map<CompVector, std::uint64_t> orbit_census(const PermGroup& g, int m,
                                                 const Caps& caps) {
    require_sweep_fits(g.degree(), m, g.order(), caps);
    std::map<CompVector, std::uint64_t> census;
    std::set<Coloring> seen;
    for_each_coloring(g.degree(), m, [&](const Coloring& f) {
        if (seen.count(f)) return;
        const auto orb = orbit(g, f);
        seen.insert(orb.begin(), orb.end());
        ++census[composition(f, m)];
    });
    return census;
}

}  // namespace polyenum
