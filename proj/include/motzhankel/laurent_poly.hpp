#pragma once

#include "motzhankel/integers.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace motzhankel {

/// Exponent pair (a, b) of the monomial x^a y^b.
struct Exponent {
    int a = 0;
    int b = 0;

    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded-lex comparison: total degree first, then the x exponent.
/// Returns true if lhs is strictly greater than rhs.
inline bool grlex_greater(const Exponent& lhs, const Exponent& rhs) {
    const int dl = lhs.a + lhs.b;
    const int dr = rhs.a + rhs.b;
    if (dl != dr) return dl > dr;
    return lhs.a > rhs.a;
}

struct Term {
    Exponent e;
    Integer c;

    friend bool operator==(const Term& l, const Term& r) { return l.e == r.e && l.c == r.c; }
};

/// Sparse bivariate Laurent polynomial over the integers.
///
/// Terms are kept in descending graded-lex order with no zero coefficients,
/// so structural equality of the term vectors is polynomial equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT: implicit lift of integer constants
    LaurentPoly(const Integer& c);  // NOLINT
    static LaurentPoly monomial(const Integer& c, int a, int b);
    static LaurentPoly x();
    static LaurentPoly y();
    /// Builds a canonical polynomial from arbitrary (possibly repeated, zero) terms.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Coefficient of x^a y^b (zero if absent).
    Integer coeff(int a, int b) const;
    const Term& leading() const { return terms_.front(); }

    int min_a() const;
    int max_a() const;
    int min_b() const;
    int max_b() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) { return p.terms_ == q.terms_; }

    /// Multiplies by x^a y^b.
    LaurentPoly shifted(int a, int b) const;
    LaurentPoly pow(unsigned e) const;

    /// Canonical text form, e.g. "x^2 + 3*x*y + y^2".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
/// Divides by the monomial x^a y^b; always exact in the Laurent ring.
LaurentPoly lp_div_monomial(const LaurentPoly& p, int a, int b);
/// Exact quotient p / q. Throws NonExactDivision if q does not divide p.
LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// (x+y)^n and (xy)^n, used all over the path formulas.
LaurentPoly level_weight_pow(unsigned n);
LaurentPoly down_weight_pow(unsigned n);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace motzhankel
