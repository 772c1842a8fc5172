#include "doctest.h"

#include "polyenum/symdet.hpp"
#include "test_util.hpp"

using namespace polyenum;

namespace {

RatMatrix from_ints(const std::vector<std::vector<int>>& rows) {
    RatMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    CHECK_THROWS_AS(RatMatrix(0), validation_error);
    RatMatrix m(2);
    CHECK(m.trace() == 0);
    m.at(0, 1) = make_rat(1, 2);
    CHECK(m.at(0, 1) == make_rat(1, 2));
    CHECK_THROWS_AS(m.at(2, 0), range_error);
    CHECK_THROWS_AS(m.at(0, -1), range_error);
    CHECK(RatMatrix::identity_matrix(3).trace() == 3);
    CHECK_THROWS_AS(RatMatrix(2) * RatMatrix(3), dimension_error);
}

TEST_CASE("trace powers of the standard 2x2 example") {
    const RatMatrix l = from_ints({{1, 2}, {3, 4}});
    const TraceVector t = trace_powers(l, 2);
    REQUIRE(t.values.size() == 2);
    CHECK(t.values[0] == 5);
    CHECK(t.values[1] == 29);  // tr([[7,10],[15,22]])
    CHECK_THROWS_AS(trace_powers(l, 0), validation_error);
}

TEST_CASE("signed cycle index polynomial for n=3") {
    // (t1^3 - 3 t1 t2 + 2 t3) / 6.
    const MultiPoly p = signed_cycle_index_polynomial(3);
    CHECK(p.to_text("t") == "1/6*t1^3 - 1/2*t1*t2 + 1/3*t3");
    CHECK(p.eval({Rat(5), Rat(29), Rat(11)}) ==
          make_rat(125 - 3 * 5 * 29 + 2 * 11, 6));
    CHECK_THROWS_AS(signed_cycle_index_polynomial(0), range_error);
    CHECK_THROWS_AS(signed_cycle_index_polynomial(21), range_error);
}

TEST_CASE("golden elementary symmetric polynomials") {
    CHECK(elementary_symmetric_via_cycle_index(1, 3).to_text("w") == "w1 + w2 + w3");
    CHECK(elementary_symmetric_via_cycle_index(2, 3).to_text("w") ==
          "w1*w2 + w1*w3 + w2*w3");
    CHECK(elementary_symmetric_via_cycle_index(3, 3).to_text("w") == "w1*w2*w3");
    CHECK(elementary_symmetric_direct(2, 4).term_count() == 6);
}

TEST_CASE("direct expansion edge cases") {
    CHECK(elementary_symmetric_direct(0, 3) == MultiPoly::one(3));
    CHECK(elementary_symmetric_direct(5, 3).is_zero());
    CHECK_THROWS_AS(elementary_symmetric_direct(-1, 3), validation_error);
    CHECK_THROWS_AS(elementary_symmetric_direct(3, 10, 5), resource_error);
}

TEST_CASE("cycle-index route requires n <= m") {
    CHECK_THROWS_AS(elementary_symmetric_via_cycle_index(4, 3), range_error);
    CHECK_THROWS_AS(elementary_symmetric_via_cycle_index(0, 3), validation_error);
}

TEST_CASE("signed power-sum substitution vanishes beyond the variable count") {
    for (int m = 1; m <= 3; ++m)
        for (int n = m + 1; n <= m + 3; ++n)
            CHECK(signed_cycle_index_power_sum(n, m).is_zero());
}

TEST_CASE("three elementary symmetric paths agree") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= m; ++n) {
            const MultiPoly direct = elementary_symmetric_direct(n, m);
            CHECK(elementary_symmetric_via_cycle_index(n, m) == direct);
            CHECK(elementary_symmetric_signed_elementwise(n, m) == direct);
        }
}

TEST_CASE("determinants of pinned matrices") {
    CHECK(det_via_traces(RatMatrix::identity_matrix(3)) == 1);
    CHECK(det_bareiss(RatMatrix::identity_matrix(3)) == 1);
    const RatMatrix l = from_ints({{1, 2}, {3, 4}});
    CHECK(det_via_traces(l) == -2);
    CHECK(det_bareiss(l) == -2);
    // Repeated rows are singular.
    const RatMatrix dup = from_ints({{1, 2}, {1, 2}});
    CHECK(det_via_traces(dup) == 0);
    CHECK(det_bareiss(dup) == 0);
}

TEST_CASE("bareiss survives zero pivots") {
    const RatMatrix swap = from_ints({{0, 1}, {1, 0}});
    CHECK(det_bareiss(swap) == -1);
    CHECK(det_via_traces(swap) == -1);
    const RatMatrix shifted = from_ints({{0, 0, 2}, {0, 3, 0}, {4, 0, 0}});
    CHECK(det_bareiss(shifted) == -24);
    CHECK(det_via_traces(shifted) == -24);
    const RatMatrix singular = from_ints({{0, 1, 1}, {0, 2, 2}, {0, 3, 3}});
    CHECK(det_bareiss(singular) == 0);
    CHECK(det_via_traces(singular) == 0);
}

TEST_CASE("rational entries with denominators") {
    RatMatrix m(2);
    m.at(0, 0) = make_rat(1, 2);
    m.at(0, 1) = make_rat(1, 3);
    m.at(1, 0) = make_rat(1, 4);
    m.at(1, 1) = make_rat(1, 5);
    // det = 1/10 - 1/12 = 1/60.
    CHECK(det_bareiss(m) == make_rat(1, 60));
    CHECK(det_via_traces(m) == make_rat(1, 60));
}

TEST_CASE("trace route equals bareiss on random matrices") {
    testutil::TestRng rng(707);
    for (int order = 1; order <= 5; ++order)
        for (int trial = 0; trial < 40; ++trial) {
            RatMatrix l(order);
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) l.at(i, j) = rng.rat(-9, 9, 9);
            CHECK(det_via_traces(l) == det_bareiss(l));
        }
}

TEST_CASE("determinant multiplies") {
    testutil::TestRng rng(808);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix a(3), b(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = rng.rat(-4, 4, 3);
                b.at(i, j) = rng.rat(-4, 4, 3);
            }
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("trace route refuses very large orders") {
    CHECK_THROWS_AS(det_via_traces(RatMatrix::identity_matrix(21)), range_error);
}
