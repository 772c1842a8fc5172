#include "polyenum/verify.hpp"

#include <random>
#include <sstream>

#include "polyenum/symdet.hpp"

namespace polyenum {

namespace {

// All randomness below flows through this: mt19937_64 has a pinned output
// sequence, and reduction by % keeps draws identical across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = draw_int(rng, 0, i);
        std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(j)]);
    }
    return Permutation(std::move(im));
}

// The closure of one or two random permutations of {0..n-1}; small n keeps
// every such subgroup within the brute-force caps.
std::pair<std::string, PermGroup> random_group(std::mt19937_64& rng, int n) {
    std::vector<Permutation> gens;
    const int count = draw_int(rng, 1, 2);
    std::string desc = "gen[";
    for (int i = 0; i < count; ++i) {
        gens.push_back(random_permutation(rng, n));
        if (i > 0) desc += ";";
        desc += gens.back().image_key();
    }
    desc += "]";
    return {desc, generate_group(n, gens)};
}

// Round-robin over the three kinds; table entries are random small
// rationals covering exactly the group's elements.
DeltaWeight random_delta(std::mt19937_64& rng, const PermGroup& g, int index) {
    switch (index % 3) {
        case 0: return DeltaWeight::uniform();
        case 1: return DeltaWeight::sign();
        default: {
            std::map<std::vector<int>, Rat> values;
            for (const auto& sigma : g.elements()) {
                const int num = draw_int(rng, -5, 5);
                const int den = draw_int(rng, 1, 5);
                values.emplace(sigma.images(), make_rat(num, den));
            }
            return DeltaWeight::table(std::move(values));
        }
    }
}

std::string short_delta(const DeltaWeight& d) {
    return d.kind() == DeltaWeight::Kind::table ? "table" : d.describe();
}

}  // namespace

VerifyReport verify_fixed_colorings(const VerifyOptions& opts) {
    VerifyReport r;
    r.suite = "fixed-colorings";
    for (int n = 1; n <= opts.max_n; ++n) {
        const auto g = named_group("sym:" + std::to_string(n));
        for (int m = 1; m <= opts.max_m; ++m) {
            std::uint64_t batch = 0;
            for (const auto& sigma : g.elements()) {
                const auto res = fixed_coloring_check(sigma, m, opts.caps);
                ++r.checks;
                ++batch;
                if (!res.equal) {
                    r.ok = false;
                    std::ostringstream out;
                    out << "sigma=" << sigma.cycle_string() << " n=" << n << " m=" << m
                        << " lhs=" << res.lhs.to_text("w") << " rhs=" << res.rhs.to_text("w");
                    r.counterexample = out.str();
                    r.lines.push_back("fixed-colorings n=" + std::to_string(n) + " m=" +
                                      std::to_string(m) + ": FAIL");
                    return r;
                }
            }
            r.lines.push_back("fixed-colorings n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              ": " + std::to_string(batch) + " elements ok");
        }
    }
    return r;
}

namespace {

// Shared driver for the two weighted-identity suites; weighted-partition additionally
// requires the ordered-partition oracle to agree.
VerifyReport verify_triples(const VerifyOptions& opts, bool with_partition_oracle) {
    VerifyReport r;
    r.suite = with_partition_oracle ? "weighted-partition" : "weighted-stabilizer";
    std::mt19937_64 rng(opts.seed ^ (with_partition_oracle ? 0x9e3779b97f4a7c15ULL
                                                           : 0xd1b54a32d192ed03ULL));
    for (int i = 0; i < opts.triples; ++i) {
        const int n = draw_int(rng, 1, opts.max_n);
        const int m = draw_int(rng, 1, opts.max_m);
        const auto [desc, g] = random_group(rng, n);
        const DeltaWeight delta = random_delta(rng, g, i);

        const GenFunction rhs = extended_enumerate(g, delta, m);
        const GenFunction lhs = lhs_stabilizer_oracle(g, delta, m, opts.caps);
        bool equal = lhs == rhs;
        std::string which = "stabilizer";
        GenFunction other = lhs;
        if (equal && with_partition_oracle) {
            other = lhs_partition_oracle(g, delta, m, opts.caps);
            equal = other == rhs;
            which = "partition";
        }
        ++r.checks;
        std::ostringstream line;
        line << r.suite << " triple " << i << ": G=" << desc << " |G|=" << g.order()
             << " n=" << n << " m=" << m << " delta=" << short_delta(delta);
        if (!equal) {
            r.ok = false;
            line << " FAIL";
            r.lines.push_back(line.str());
            std::ostringstream out;
            out << which << " oracle disagrees: G=" << desc
                << " delta=" << delta.describe() << " m=" << m
                << " lhs=" << (which == "stabilizer" ? lhs : other).poly.to_text("w")
                << " rhs=" << rhs.poly.to_text("w");
            r.counterexample = out.str();
            return r;
        }
        line << " ok";
        r.lines.push_back(line.str());
    }
    return r;
}

}  // namespace

VerifyReport verify_weighted_stabilizer(const VerifyOptions& opts) {
    return verify_triples(opts, false);
}

VerifyReport verify_weighted_partition(const VerifyOptions& opts) {
    return verify_triples(opts, true);
}

VerifyReport verify_esym(const VerifyOptions& opts) {
    VerifyReport r;
    r.suite = "esym";
    (void)opts;
    for (int m = 1; m <= 7; ++m) {
        for (int n = 1; n <= 7; ++n) {
            const MultiPoly direct = elementary_symmetric_direct(n, m);
            const MultiPoly via_partitions = signed_cycle_index_power_sum(n, m);
            const MultiPoly via_elements = elementary_symmetric_signed_elementwise(n, m);
            ++r.checks;
            const bool equal = via_partitions == direct && via_elements == direct;
            const char* label = n <= m ? "e_n" : "vanishes";
            if (!equal) {
                r.ok = false;
                std::ostringstream out;
                out << "n=" << n << " m=" << m << " direct=" << direct.to_text("w")
                    << " partitions=" << via_partitions.to_text("w")
                    << " elements=" << via_elements.to_text("w");
                r.counterexample = out.str();
                r.lines.push_back("esym n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  ": FAIL");
                return r;
            }
            r.lines.push_back("esym n=" + std::to_string(n) + " m=" + std::to_string(m) +
                              " (" + label + "): 3 paths agree");
        }
    }
    return r;
}

VerifyReport verify_det(const VerifyOptions& opts) {
    VerifyReport r;
    r.suite = "det";
    std::mt19937_64 rng(opts.seed ^ 0x2545f4914f6cdd1dULL);

    const auto check = [&](const RatMatrix& l, const std::string& what) {
        const Rat lhs = det_via_traces(l);
        const Rat rhs = det_bareiss(l);
        ++r.checks;
        if (lhs != rhs) {
            r.ok = false;
            std::ostringstream out;
            out << what << ": det_via_traces=" << rat_to_string(lhs)
                << " det_bareiss=" << rat_to_string(rhs) << " entries=";
            for (int i = 0; i < l.order(); ++i)
                for (int j = 0; j < l.order(); ++j)
                    out << rat_to_string(l.at(i, j)) << (j + 1 < l.order() ? "," : ";");
            r.counterexample = out.str();
        }
        return r.ok;
    };

    // Pinned cases first: identity, a duplicate-row singular matrix, and a
    // small dense matrix with determinant -2.
    for (int order = 1; order <= 4; ++order)
        if (!check(RatMatrix::identity_matrix(order), "identity")) return r;
    {
        RatMatrix dup(3);
        for (int j = 0; j < 3; ++j) {
            dup.at(0, j) = j + 1;
            dup.at(1, j) = j + 1;
            dup.at(2, j) = make_rat(1, j + 2);
        }
        if (!check(dup, "duplicate rows")) return r;
        RatMatrix small(2);
        small.at(0, 0) = 1;
        small.at(0, 1) = 2;
        small.at(1, 0) = 3;
        small.at(1, 1) = 4;
        if (!check(small, "2x2")) return r;
    }
    r.lines.push_back("det pinned cases: ok");

    for (int order = 1; order <= 6; ++order) {
        for (int i = 0; i < 200; ++i) {
            RatMatrix l(order);
            for (int row = 0; row < order; ++row)
                for (int col = 0; col < order; ++col)
                    l.at(row, col) = make_rat(draw_int(rng, -9, 9), draw_int(rng, 1, 9));
            if (!check(l, "order " + std::to_string(order) + " sample " + std::to_string(i))) {
                r.lines.push_back("det order " + std::to_string(order) + ": FAIL");
                return r;
            }
        }
        r.lines.push_back("det order " + std::to_string(order) + ": 200 random ok");
    }
    return r;
}

}  // namespace polyenum
