#pragma once

#include "motzhankel/matrix.hpp"

#include <string>

namespace motzhankel {

/// Binomial that vanishes as soon as v < 0 or u < v, including C(-1, 0).
/// Only the connection matrix uses this rule.
Integer vanishing_binomial(long u, long v);

/// Entry (i, j) of the n x n connection matrix; entries carry at most a
/// 1/(xy) denominator.
LaurentPoly connection_entry(int n, int i, int j);
PolyMatrix connection_matrix(int n);

/// Last-row entry (n-1, j) of the connection matrix written in powers of
/// x + y and xy. Requires 0 <= j <= n - 2.
LaurentPoly last_row_alt(int n, int j);

/// Last-row-only matrices completing the connection-matrix factorization
/// for the shift-0 and shift-1 prefix Hankel matrices.
PolyMatrix correction_c0(int n, int k);
PolyMatrix correction_c1(int n, int k);

/// Both sides of an identity; `holds` iff lhs == rhs.
struct IdentityCheck {
    bool holds = false;
    std::string lhs;
    std::string rhs;
    std::string diff;
};

IdentityCheck lemma7_identity(int n);
IdentityCheck lemma8_identity(int m, int k);
IdentityCheck lemma9_identity(int m, int n, int k);
IdentityCheck factorization_identity(int n, int k, int shift);
IdentityCheck path_cutting_identity(int i, int j, int k);
IdentityCheck last_row_identity(int n, int j);

bool check_lemma7(int n);
bool check_lemma8(int m, int k);
bool check_lemma9(int m, int n, int k);
bool check_factorization(int n, int k, int shift);

/// Hankel matrix with entries prefix_gf(i + j + shift, k).
PolyMatrix prefix_hankel(int n, int k, int shift);
/// Hankel matrix with entries gf_restricted(i + j + shift, k, 0).
PolyMatrix endpoint_zero_hankel(int n, int k, int shift);

}  // namespace motzhankel
