#pragma once

// Randomized identity suites behind the `verify` CLI subcommand. Every
// suite is fully determined by its options (seed included), reports one
// line per check batch, and carries a counterexample description for the
// first failure. Suites:
//
//   fixed-colorings      sum_{f in F_sigma} W(f) == Z(sigma, wtilde) for
//                        every sigma in Sym(n), n <= max_n, m <= max_m
//   weighted-stabilizer  extended_enumerate == lhs_stabilizer_oracle on
//                        random (G, delta, m) triples
//   weighted-partition   as weighted-stabilizer plus lhs_partition_oracle,
//                        all three equal
//   esym                 partition path == element path == direct expansion
//                        of the elementary symmetric polynomial, 1<=n<=m<=7
//   det                  det_via_traces == det_bareiss on random matrices
//                        of order 1..6 plus pinned cases

#include <cstdint>
#include <string>
#include <vector>

#include "polyenum/enumeration.hpp"

namespace polyenum {

struct VerifyOptions {
    int max_n = 5;
    int max_m = 3;
    int triples = 50;  // random (G, delta, m) triples for the weighted suites
    std::uint64_t seed = 0;
    Caps caps;
};

struct VerifyReport {
    std::string suite;
    bool ok = true;
    std::uint64_t checks = 0;
    std::vector<std::string> lines;  // deterministic, printable as-is
    std::string counterexample;      // empty when ok
};

VerifyReport verify_fixed_colorings(const VerifyOptions& opts);
VerifyReport verify_weighted_stabilizer(const VerifyOptions& opts);
VerifyReport verify_weighted_partition(const VerifyOptions& opts);
VerifyReport verify_esym(const VerifyOptions& opts);   // fixed 1<=n<=m<=7 sweep
VerifyReport verify_det(const VerifyOptions& opts);  // orders 1..6, 200 each

}  // namespace polyenum
