#pragma once

#include "motzhankel/integers.hpp"
#include "motzhankel/laurent_poly.hpp"

#include <string>

namespace motzhankel {

/// Element a + b*alpha of Q(alpha), where alpha^2 = r*alpha + s.
///
/// (r, s) = (0, -1) gives the Gaussian rationals, (1, -1) gives Q(omega)
/// for a primitive sixth root of unity omega. Rational values (b = 0) mix
/// freely with any field; two irrational operands must agree on (r, s).
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(Rational a, Rational b, long r, long s);
    static QuadElem rational(Rational a, long r = 0, long s = -1) { return QuadElem(std::move(a), 0, r, s); }
    static QuadElem alpha(long r, long s) { return QuadElem(0, 1, r, s); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long r() const { return r_; }
    long s() const { return s_; }
    bool is_rational() const { return sgn(b_) == 0; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadElem operator-() const { return QuadElem(-a_, -b_, r_, s_); }
    friend QuadElem operator+(const QuadElem& p, const QuadElem& q);
    friend QuadElem operator-(const QuadElem& p, const QuadElem& q);
    friend QuadElem operator*(const QuadElem& p, const QuadElem& q);
    QuadElem& operator+=(const QuadElem& q) { return *this = *this + q; }
    QuadElem& operator*=(const QuadElem& q) { return *this = *this * q; }

    /// a^2 + a*b*r - b^2*s.
    Rational norm() const;
    /// Throws NonInvertiblePoint on zero.
    QuadElem inverse() const;
    /// Integer powers; negative exponents go through inverse().
    QuadElem pow(long e) const;

    friend bool operator==(const QuadElem& p, const QuadElem& q);
    friend bool operator==(const QuadElem& p, const Rational& q) { return p.is_rational() && p.a_ == q; }

    std::string to_string() const;

private:
    Rational a_ = 0;
    Rational b_ = 0;
    long r_ = 0;
    long s_ = -1;
};

/// Exact evaluation of p at (x, y) = (xv, yv).
QuadElem lp_eval_quad(const LaurentPoly& p, const QuadElem& xv, const QuadElem& yv);

}  // namespace motzhankel
