#pragma once

#include "motzhankel/laurent_poly.hpp"
#include "motzhankel/quad_elem.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace motzhankel {

// Path generating functions for three-step paths with step weights
// up = 1, level = x + y, down = x*y.

/// Weight sum over all n-step paths from height k to height l.
LaurentPoly gf_unrestricted(int n, int k, int l);

/// Same, restricted to paths that never go below height 0. Throws
/// NegativeHeight if k or l is negative.
LaurentPoly gf_restricted(int n, int k, int l);

/// Transfer-matrix recursion over heights; independent of the closed forms.
LaurentPoly gf_dp(int n, int k, int l, bool restricted);

/// Restricted generating function via the reflection principle.
LaurentPoly gf_restricted_reflection(int n, int k, int l);

/// Sum over all end heights of gf_restricted(n, k, l).
LaurentPoly prefix_gf(int n, int k);

enum class SpecPoint { I, Omega, One, MinusOne };

/// (x, y) at the specialization: (i, -i), (w, 1/w), (1, 1), (-1, -1)
/// where i^2 = -1 and w^2 = w - 1.
std::pair<QuadElem, QuadElem> spec_point_values(SpecPoint point);

/// Integer value of prefix_gf(n, k) at the point, from the band-sum
/// closed forms (no polynomial arithmetic involved).
Integer spec_prefix_int(SpecPoint point, int n, int k);

/// Integer value of gf_unrestricted / gf_restricted at the point, from the
/// single-endpoint closed forms.
Integer spec_endpoint_int(SpecPoint point, int n, int k, int l, bool restricted);

std::string_view to_string(SpecPoint point);
/// Accepts "i", "omega", "one", "minus_one" (case-sensitive).
SpecPoint parse_spec_point(std::string_view name);

}  // namespace motzhankel
