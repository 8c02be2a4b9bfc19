#include "support.hpp"

#include "motzhankel/connection.hpp"
#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/paths.hpp"
#include "motzhankel/sequences.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace motzhankel;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

IntMatrix int_matrix(std::size_t n, std::initializer_list<long> values) {
    IntMatrix m(n);
    std::size_t idx = 0;
    for (long v : values) {
        m(idx / n, idx % n) = v;
        ++idx;
    }
    return m;
}

}  // namespace

TEST_SUITE("hankel") {

TEST_CASE("small integer determinants") {
    CHECK(det_bareiss(IntMatrix(0)) == 1);
    CHECK(det_bareiss(int_matrix(1, {7})) == 7);
    CHECK(det_bareiss(int_matrix(2, {1, 2, 3, 4})) == -2);
    CHECK(det_bareiss(int_matrix(3, {0, 1, 2, 1, 0, 3, 4, -3, 8})) == -2);
    CHECK(det_bareiss(int_matrix(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
    CHECK(det_bareiss(int_matrix(3, {1, 2, 3, 2, 4, 6, 1, 1, 1})) == 0);
    CHECK(det_bareiss(int_matrix(3, {0, 1, 2, 0, 3, 4, 0, 5, 6})) == 0);
    CHECK(det_cofactor(int_matrix(3, {0, 1, 2, 1, 0, 3, 4, -3, 8})) == -2);
}

TEST_CASE("Bareiss and cofactor expansion agree on random Laurent matrices") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(1, 5));
        const PolyMatrix m = testing::random_poly_matrix(n);
        CHECK(det_bareiss(m) == det_cofactor(m));
    }
}

TEST_CASE("Bareiss and cofactor expansion agree on the theorem matrices") {
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k <= 2; ++k)
            for (int shift : {0, 1}) {
                const PolyMatrix p = prefix_hankel(n, k, shift);
                CHECK(det_bareiss(p) == det_cofactor(p));
                const PolyMatrix e = build_hankel(
                    HankelSpec{static_cast<std::size_t>(n), shift, [k](int t) { return gf_restricted(t, 0, k); }});
                CHECK(det_bareiss(e) == det_cofactor(e));
            }
    for (int n = 1; n <= 7; ++n) {
        const PolyMatrix a = connection_matrix(n);
        CHECK(det_bareiss(a) == det_cofactor(a));
    }
}

TEST_CASE("swapping rows flips the sign") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(2, 4));
        PolyMatrix m = testing::random_poly_matrix(n);
        const LaurentPoly d = det_bareiss(m);
        const auto i = static_cast<std::size_t>(testing::uniform(0, static_cast<int>(n) - 1));
        const auto j = (i + 1 + static_cast<std::size_t>(testing::uniform(0, static_cast<int>(n) - 2))) % n;
        m.swap_rows(i, j);
        CHECK(det_bareiss(m) == -d);
    }
}

TEST_CASE("determinant is multiplicative") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(testing::uniform(1, 4));
        const PolyMatrix a = testing::random_poly_matrix(n), b = testing::random_poly_matrix(n);
        CHECK(det_bareiss(a * b) == det_bareiss(a) * det_bareiss(b));
    }
}

TEST_CASE("cofactor expansion refuses large matrices") {
    CHECK_THROWS_AS(det_cofactor(IntMatrix(9)), DimensionTooLarge);
    CHECK(det_cofactor(IntMatrix(9), 9) == 0);
}

TEST_CASE("Hankel matrices are built from i + j + shift") {
    const PolyMatrix h = build_hankel(HankelSpec{3, 1, [](int t) { return LaurentPoly(t); }});
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(h(i, j) == LaurentPoly(static_cast<long>(i + j + 1)));
    const IntMatrix g = build_int_hankel(2, 0, [](int t) { return Integer(t * t); });
    CHECK(g(1, 1) == 4);
}

TEST_CASE("classical Hankel transforms") {
    const auto catalan = [](int t) { return catalan_number(t); };
    const auto motzkin = [](int t) { return motzkin_number(t); };
    const auto mp = [](int t) { return integer_element(parse_seq_name("mp"), t); };
    const std::vector<Integer> ones(16, Integer(1));
    CHECK(hankel_transform(catalan, 16, 0) == ones);
    CHECK(hankel_transform(catalan, 16, 1) == ones);
    CHECK(hankel_transform(motzkin, 16, 0) == ones);
    CHECK(hankel_transform(mp, 16, 0) == ones);
    CHECK(hankel_transform(motzkin, 6, 1) == ints({1, 0, -1, -1, 0, 1}));
}

TEST_CASE("symbolic prefix determinant for two rows") {
    CHECK(det_bareiss(prefix_hankel(2, 0, 0)).to_string() == "x*y");
}

}  // TEST_SUITE
