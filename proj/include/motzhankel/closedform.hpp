#pragma once

#include "motzhankel/laurent_poly.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace motzhankel {

enum class TheoremId { T1, T2, T3, T4 };
enum class CorollaryId { C13, C14, C15, C16, C17, C18, T19 };

/// Which line of a case distinction produced a closed-form value.
struct ClosedFormCase {
    std::string theorem_id;
    int n = 0;
    int k = 0;
    int n1 = 0;       // quotient of the line that fired (0 for the vanishing line)
    int residue = 0;  // n mod (k + 1)
    int case_index = 0;  // 1-based line number; 0 = "otherwise zero"
};

/// Polynomial value of (y^{(k+1)m} - x^{(k+1)m}) / (y^{k+1} - x^{k+1}).
LaurentPoly geom_quotient(int m, int k);

/// Case resolution with first-applicable-line semantics.
ClosedFormCase resolve_theorem_case(TheoremId id, int n, int k);
LaurentPoly theorem_rhs(TheoremId id, int n, int k);

/// Literal case table of a corollary.
ClosedFormCase resolve_corollary_case(CorollaryId id, int n, int k);
Integer corollary_literal(CorollaryId id, int n, int k);

/// The corollary value obtained by specializing the matching theorem
/// (T19 additionally subtracts the lower-right minor of its Hankel matrix).
Integer corollary_specialized(CorollaryId id, int n, int k);

struct CorollaryEvaluation {
    Integer literal;
    Integer specialized;
    ClosedFormCase literal_case;
    bool agree = false;
};

CorollaryEvaluation evaluate_corollary(CorollaryId id, int n, int k);

/// Both routes; throws CaseTableMismatch when they disagree.
Integer corollary_rhs(CorollaryId id, int n, int k);

/// Separately printed special-case tables (C16 with k = 0, 1, 2), read
/// literally; nullopt where no such table exists.
std::optional<Integer> corollary_printed_special(CorollaryId id, int n, int k);

/// Entry (i, j) of the integer Hankel matrix on the determinant side.
Integer corollary_lhs_entry(CorollaryId id, int i, int j, int k);

std::string_view to_string(TheoremId id);
std::string_view to_string(CorollaryId id);
TheoremId parse_theorem_id(std::string_view name);
CorollaryId parse_corollary_id(std::string_view name);

}  // namespace motzhankel
