#include "motzhankel/errors.hpp"
#include "motzhankel/hypergeom.hpp"

#include <doctest.h>

#include <random>

using namespace motzhankel;

namespace {

std::mt19937_64 gen(777);

Rational random_rational(int range, int max_den) {
    Rational q(std::uniform_int_distribution<int>(-range, range)(gen),
               std::uniform_int_distribution<int>(1, max_den)(gen));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_SUITE("hypergeom") {

TEST_CASE("Pochhammer symbols") {
    CHECK(pochhammer(Rational(3), 0) == 1);
    CHECK(pochhammer(Rational(3), 4) == 3 * 4 * 5 * 6);
    CHECK(pochhammer(Rational(-2), 3) == 0);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("termination index is the smallest nonpositive integer upper parameter") {
    CHECK(*termination_index(HyperSeries{{Rational(-3), Rational(-5)}, {Rational(1)}, 1}) == 3);
    CHECK(*termination_index(HyperSeries{{Rational(0), Rational(1, 2)}, {}, 1}) == 0);
    CHECK_FALSE(termination_index(HyperSeries{{Rational(1, 2), Rational(4)}, {Rational(1)}, 1}).has_value());
}

TEST_CASE("a terminating series evaluates exactly N + 1 summands") {
    for (unsigned N = 0; N <= 12; ++N) {
        const HyperSum s =
            eval_terminating_detailed(HyperSeries{{Rational(-static_cast<long>(N)), Rational(7, 3)}, {Rational(5, 2)}, 1});
        CHECK(s.terms == N + 1);
    }
    // 1F0[-N;;-1] = 2^N.
    CHECK(eval_terminating(HyperSeries{{Rational(-6)}, {}, -1}) == 64);
}

TEST_CASE("error conditions") {
    CHECK_THROWS_AS(eval_terminating(HyperSeries{{Rational(1, 2)}, {Rational(1)}, 1}), PreconditionViolation);
    CHECK_THROWS_AS(eval_terminating(HyperSeries{{Rational(-4)}, {Rational(-2)}, 1}), LowerParamZeroDivision);
    CHECK_NOTHROW(eval_terminating(HyperSeries{{Rational(-2)}, {Rational(-2)}, 1}));
}

TEST_CASE("Chu-Vandermonde summation on random instances") {
    int checked = 0;
    while (checked < 200) {
        const Rational a = random_rational(20, 6), c = random_rational(20, 6);
        const unsigned N = std::uniform_int_distribution<unsigned>(0, 12)(gen);
        try {
            const bool holds = check_chu_vandermonde(a, N, c);
            CHECK(holds);
            ++checked;
        } catch (const LowerParamZeroDivision&) {
        }
    }
}

TEST_CASE("the 4F3 summation on random instances") {
    int checked = 0;
    while (checked < 100) {
        const unsigned n = std::uniform_int_distribution<unsigned>(1, 10)(gen);
        const Rational A = random_rational(20, 5), B = random_rational(20, 5);
        try {
            const bool holds = check_lemma10(n, A, B);
            CHECK(holds);
            ++checked;
        } catch (const LowerParamZeroDivision&) {
        }
    }
}

TEST_CASE("the 5F4 contiguous relation on random tuples") {
    int checked = 0;
    while (checked < 50) {
        const long N = std::uniform_int_distribution<long>(1, 8)(gen);
        const std::vector<Rational> upper{Rational(-N), random_rational(15, 4), random_rational(15, 4),
                                          random_rational(15, 4), random_rational(15, 4)};
        const std::vector<Rational> lower{random_rational(15, 4), random_rational(15, 4), random_rational(15, 4),
                                          random_rational(15, 4)};
        try {
            const bool holds = check_contiguous_5f4(upper, lower);
            CHECK(holds);
            ++checked;
        } catch (const LowerParamZeroDivision&) {
        } catch (const PreconditionViolation&) {
        }
    }
}

}  // TEST_SUITE
