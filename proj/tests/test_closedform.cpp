#include "motzhankel/closedform.hpp"
#include "motzhankel/connection.hpp"
#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/paths.hpp"

#include <doctest.h>

using namespace motzhankel;

namespace {

LaurentPoly endpoint_det(int n, int k, int shift) {
    return det_bareiss(
        build_hankel(HankelSpec{static_cast<std::size_t>(n), shift, [k](int t) { return gf_restricted(t, 0, k); }}));
}

Integer corollary_det(CorollaryId id, int n, int k) {
    IntMatrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = corollary_lhs_entry(id, i, j, k);
    return det_bareiss(m);
}

const CorollaryId kCorollaries[] = {CorollaryId::C13, CorollaryId::C14, CorollaryId::C15, CorollaryId::C16,
                                    CorollaryId::C17, CorollaryId::C18, CorollaryId::T19};

}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("geometric quotient") {
    CHECK(geom_quotient(0, 2) == LaurentPoly());
    CHECK(geom_quotient(1, 2) == LaurentPoly(1));
    CHECK(geom_quotient(2, 0).to_string() == "x + y");
    CHECK(geom_quotient(3, 1).to_string() == "x^4 + x^2*y^2 + y^4");
}

TEST_CASE("prefix Hankel determinants match the theorems") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(det_bareiss(prefix_hankel(n, k, 0)) == theorem_rhs(TheoremId::T3, n, k));
            CHECK(det_bareiss(prefix_hankel(n, k, 1)) == theorem_rhs(TheoremId::T4, n, k));
        }
}

TEST_CASE("endpoint-zero Hankel determinants match the theorems") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(endpoint_det(n, k, 0) == theorem_rhs(TheoremId::T1, n, k));
            CHECK(endpoint_det(n, k, 1) == theorem_rhs(TheoremId::T2, n, k));
        }
}

TEST_CASE("first applicable line decides overlapping cases") {
    // With k = 0 every n sits on the first line (modulus 1, offset 0).
    for (int n = 1; n <= 6; ++n) {
        const ClosedFormCase c = resolve_theorem_case(TheoremId::T3, n, 0);
        CHECK(c.case_index == 1);
        CHECK(c.n1 == n);
    }
    CHECK(theorem_rhs(TheoremId::T3, 2, 0).to_string() == "x*y");
    // n = 2 with k = 2 is neither 0 nor 1 modulo 3.
    CHECK(resolve_theorem_case(TheoremId::T3, 2, 2).case_index == 0);
    CHECK(theorem_rhs(TheoremId::T3, 2, 2) == LaurentPoly());
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(theorem_rhs(TheoremId::T1, 0, 1), PreconditionViolation);
    CHECK_THROWS_AS(theorem_rhs(TheoremId::T1, 3, -1), PreconditionViolation);
    CHECK_THROWS(parse_theorem_id("T5"));
    CHECK_THROWS(parse_corollary_id("C12"));
    CHECK(parse_corollary_id("T19") == CorollaryId::T19);
    CHECK(to_string(TheoremId::T4) == "T4");
}

TEST_CASE("integer determinants equal the specialized theorems") {
    for (CorollaryId id : kCorollaries)
        for (int n = 1; n <= 16; ++n)
            for (int k = 0; k <= 4; ++k) {
                CAPTURE(to_string(id));
                CAPTURE(n);
                CAPTURE(k);
                CHECK(corollary_det(id, n, k) == corollary_specialized(id, n, k));
            }
}

TEST_CASE("literal case tables agree away from the known misprint") {
    for (CorollaryId id : kCorollaries)
        for (int n = 1; n <= 16; ++n)
            for (int k = 0; k <= 4; ++k) {
                if (id == CorollaryId::C16 && k == 4 && n == 9) continue;
                CAPTURE(to_string(id));
                CAPTURE(n);
                CAPTURE(k);
                CHECK(evaluate_corollary(id, n, k).agree);
            }
}

TEST_CASE("the misprinted line is reported") {
    const CorollaryEvaluation ev = evaluate_corollary(CorollaryId::C16, 9, 4);
    CHECK_FALSE(ev.agree);
    CHECK(ev.literal_case.case_index == 10);
    CHECK(ev.literal == -3);
    CHECK(ev.specialized == 3);
    CHECK_THROWS_AS(corollary_rhs(CorollaryId::C16, 9, 4), CaseTableMismatch);
    CHECK(corollary_rhs(CorollaryId::C16, 8, 4) == corollary_det(CorollaryId::C16, 8, 4));
}

TEST_CASE("printed special-case tables") {
    CHECK_FALSE(corollary_printed_special(CorollaryId::C15, 3, 0).has_value());
    CHECK_FALSE(corollary_printed_special(CorollaryId::C16, 3, 3).has_value());
    for (int n = 1; n <= 16; ++n) {
        CHECK(*corollary_printed_special(CorollaryId::C16, n, 0) == corollary_det(CorollaryId::C16, n, 0));
        CHECK(*corollary_printed_special(CorollaryId::C16, n, 2) == corollary_det(CorollaryId::C16, n, 2));
    }
    // The k = 1 table lists residues 3, 4 and 5, which only fit a period of 6.
    CHECK(*corollary_printed_special(CorollaryId::C16, 1, 1) != corollary_det(CorollaryId::C16, 1, 1));
}

TEST_CASE("band entries") {
    CHECK(corollary_lhs_entry(CorollaryId::C17, 0, 0, 0) == 1);
    CHECK(corollary_lhs_entry(CorollaryId::T19, 0, 0, 2) == 0);
    CHECK(corollary_lhs_entry(CorollaryId::C15, 1, 2, 0) == 13);
    CHECK_THROWS_AS(corollary_lhs_entry(CorollaryId::C13, -1, 0, 0), PreconditionViolation);
}

}  // TEST_SUITE
