#include "motzhankel/connection.hpp"

#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/paths.hpp"

#include <iostream>
#include <sstream>

namespace motzhankel {

namespace {

const LaurentPoly& one_plus_x_one_plus_y() {
    static const LaurentPoly p = (LaurentPoly(1) + LaurentPoly::x()) * (LaurentPoly(1) + LaurentPoly::y());
    return p;
}

IdentityCheck compare(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    IdentityCheck out;
    out.holds = lhs == rhs;
    out.lhs = lhs.to_string();
    out.rhs = rhs.to_string();
    out.diff = (lhs - rhs).to_string();
    return out;
}

IdentityCheck compare(const PolyMatrix& lhs, const PolyMatrix& rhs) {
    IdentityCheck out;
    out.holds = lhs == rhs;
    out.lhs = std::to_string(lhs.dim()) + "x" + std::to_string(lhs.dim()) + " product";
    out.rhs = std::to_string(rhs.dim()) + "x" + std::to_string(rhs.dim()) + " sum";
    std::ostringstream diff;
    bool any = false;
    for (std::size_t i = 0; i < lhs.dim(); ++i)
        for (std::size_t j = 0; j < lhs.dim(); ++j) {
            LaurentPoly d = lhs(i, j) - rhs(i, j);
            if (d.is_zero()) continue;
            diff << (any ? "; " : "") << "(" << i << "," << j << "): " << d;
            any = true;
        }
    out.diff = any ? diff.str() : "0";
    return out;
}

bool logged(const IdentityCheck& c, const std::string& label) {
    if (!c.holds) std::clog << label << " failed, difference: " << c.diff << '\n';
    return c.holds;
}

// Sum over l >= 0 of gf_unrestricted(steps, 0, base + l); terms vanish once
// the end height exceeds the step count.
LaurentPoly unrestricted_tail(int steps, int base) {
    LaurentPoly sum;
    for (int h = std::max(base, -steps); h <= steps; ++h) sum += gf_unrestricted(steps, 0, h);
    return sum;
}

PolyMatrix correction(int n, int k, int shift) {
    if (n < 1 || k < 0) throw PreconditionViolation("correction matrix needs n >= 1, k >= 0");
    PolyMatrix c(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        c(n - 1, j) = down_weight_pow(static_cast<unsigned>(n - 1)) * unrestricted_tail(j + shift, n - k);
    return c;
}

}  // namespace

Integer vanishing_binomial(long u, long v) {
    if (v < 0 || u < v) return 0;
    return binomial(u, v);
}

LaurentPoly connection_entry(int n, int i, int j) {
    if (n < 1 || i < 0 || j < 0 || i >= n || j >= n) throw IndexOutOfRange("connection matrix index out of range");
    if (i == n - 1 && j == n - 1) {
        const LaurentPoly num = LaurentPoly::monomial(1, 1, 1) - LaurentPoly(n - 1) * (LaurentPoly::x() + LaurentPoly::y());
        return lp_div_monomial(num, 1, 1);
    }
    if (i == j) return lp_div_monomial(one_plus_x_one_plus_y(), 1, 1);
    if (i + 1 == j) return LaurentPoly::monomial(-1, -1, -1);
    if (i == n - 1) {
        std::vector<Term> terms;
        for (int l = j; l <= n; ++l) {
            const Integer head = vanishing_binomial(l, j);
            terms.push_back(Term{{l - j, n - 1 - l}, head * vanishing_binomial(n + j - 1 - l, j)});
            terms.push_back(Term{{l - j, n - l}, head * vanishing_binomial(n + j - l, j)});
        }
        LaurentPoly sum = LaurentPoly::from_terms(std::move(terms));
        if ((n + j) % 2 != 0) sum = -sum;
        return lp_div_monomial(sum, 1, 1);
    }
    return {};
}

PolyMatrix connection_matrix(int n) {
    if (n < 1) throw PreconditionViolation("connection matrix needs n >= 1");
    PolyMatrix a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = connection_entry(n, i, j);
    return a;
}

LaurentPoly last_row_alt(int n, int j) {
    if (j < 0 || j > n - 2) throw IndexOutOfRange("last_row_alt needs 0 <= j <= n-2");
    LaurentPoly sum;
    for (int r = 0; 2 * r <= n; ++r) {
        const LaurentPoly xy_r = down_weight_pow(static_cast<unsigned>(r));
        const Integer c1 = vanishing_binomial(n - r - 1, r) * vanishing_binomial(n - 2 * r - 1, j);
        const Integer c2 = vanishing_binomial(n - r, r) * vanishing_binomial(n - 2 * r, j);
        LaurentPoly part;
        if (sgn(c1) != 0) part += LaurentPoly(c1) * xy_r * level_weight_pow(static_cast<unsigned>(n - 1 - j - 2 * r));
        if (sgn(c2) != 0) part += LaurentPoly(c2) * xy_r * level_weight_pow(static_cast<unsigned>(n - j - 2 * r));
        if (r % 2 == 0)
            sum += part;
        else
            sum -= part;
    }
    if ((n + j) % 2 != 0) sum = -sum;
    return lp_div_monomial(sum, 1, 1);
}

PolyMatrix correction_c0(int n, int k) { return correction(n, k, 0); }
PolyMatrix correction_c1(int n, int k) { return correction(n, k, 1); }

PolyMatrix prefix_hankel(int n, int k, int shift) {
    return build_hankel(HankelSpec{static_cast<std::size_t>(n), shift, [k](int t) { return prefix_gf(t, k); }});
}

PolyMatrix endpoint_zero_hankel(int n, int k, int shift) {
    return build_hankel(HankelSpec{static_cast<std::size_t>(n), shift, [k](int t) { return gf_restricted(t, k, 0); }});
}

IdentityCheck lemma7_identity(int n) {
    if (n < 1) throw PreconditionViolation("check_lemma7 needs n >= 1");
    // Cleared of the ((1+x)(1+y))^(n-1) denominators.
    LaurentPoly lhs = connection_entry(n, n - 1, n - 1) * one_plus_x_one_plus_y().pow(static_cast<unsigned>(n - 1));
    for (int j = 0; j <= n - 2; ++j)
        lhs += connection_entry(n, n - 1, j) * one_plus_x_one_plus_y().pow(static_cast<unsigned>(j));
    return compare(lhs, down_weight_pow(static_cast<unsigned>(n - 1)));
}

IdentityCheck lemma8_identity(int m, int k) {
    if (m < 0 || k < 0) throw PreconditionViolation("check_lemma8 needs m, k >= 0");
    const LaurentPoly lhs = one_plus_x_one_plus_y() * prefix_gf(m, k) - prefix_gf(m + 1, k);
    return compare(lhs, LaurentPoly::monomial(1, 1, 1) * gf_restricted(m, k, 0));
}

IdentityCheck lemma9_identity(int m, int n, int k) {
    if (n < 1 || m < 0 || k < 0) throw PreconditionViolation("check_lemma9 needs n >= 1, m >= 0, k >= 0");
    if (m > n) throw PreconditionViolation("check_lemma9 needs m <= n");
    LaurentPoly lhs;
    for (int j = 0; j < n; ++j) lhs += connection_entry(n, n - 1, j) * prefix_gf(m + j, k);
    const LaurentPoly rhs =
        gf_restricted(m + n - 1, k, 0) + down_weight_pow(static_cast<unsigned>(n - 1)) * unrestricted_tail(m, n - k);
    return compare(lhs, rhs);
}

IdentityCheck factorization_identity(int n, int k, int shift) {
    if (shift != 0 && shift != 1) throw PreconditionViolation("shift must be 0 or 1");
    const PolyMatrix lhs = connection_matrix(n) * prefix_hankel(n, k, shift);
    const PolyMatrix rhs = endpoint_zero_hankel(n, k, shift) + (shift == 0 ? correction_c0(n, k) : correction_c1(n, k));
    return compare(lhs, rhs);
}

IdentityCheck path_cutting_identity(int i, int j, int k) {
    LaurentPoly rhs;
    for (int ell = 0; ell <= i; ++ell) rhs += gf_restricted(i, 0, ell) * gf_restricted(j, ell, k);
    return compare(gf_restricted(i + j, 0, k), rhs);
}

IdentityCheck last_row_identity(int n, int j) { return compare(last_row_alt(n, j), connection_entry(n, n - 1, j)); }

bool check_lemma7(int n) { return logged(lemma7_identity(n), "lemma7(n=" + std::to_string(n) + ")"); }

bool check_lemma8(int m, int k) {
    return logged(lemma8_identity(m, k), "lemma8(m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")");
}

bool check_lemma9(int m, int n, int k) {
    return logged(lemma9_identity(m, n, k),
                  "lemma9(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
}

bool check_factorization(int n, int k, int shift) {
    return logged(factorization_identity(n, k, shift), "factorization(n=" + std::to_string(n) +
                                                           ",k=" + std::to_string(k) + ",shift=" + std::to_string(shift) + ")");
}

}  // namespace motzhankel
