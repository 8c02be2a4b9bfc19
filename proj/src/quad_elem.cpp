#include "motzhankel/quad_elem.hpp"

#include "motzhankel/errors.hpp"

#include <map>
#include <sstream>

namespace motzhankel {

namespace {

// Field parameters of the result; rationals adopt the other operand's field.
std::pair<long, long> common_field(const QuadElem& p, const QuadElem& q) {
    if (p.is_rational()) return {q.r(), q.s()};
    if (q.is_rational()) return {p.r(), p.s()};
    if (p.r() != q.r() || p.s() != q.s()) throw std::invalid_argument("QuadElem operands from different fields");
    return {p.r(), p.s()};
}

}  // namespace

QuadElem::QuadElem(Rational a, Rational b, long r, long s) : a_(std::move(a)), b_(std::move(b)), r_(r), s_(s) {
    a_.canonicalize();
    b_.canonicalize();
}

QuadElem operator+(const QuadElem& p, const QuadElem& q) {
    auto [r, s] = common_field(p, q);
    return QuadElem(p.a_ + q.a_, p.b_ + q.b_, r, s);
}

QuadElem operator-(const QuadElem& p, const QuadElem& q) {
    auto [r, s] = common_field(p, q);
    return QuadElem(p.a_ - q.a_, p.b_ - q.b_, r, s);
}

QuadElem operator*(const QuadElem& p, const QuadElem& q) {
    auto [r, s] = common_field(p, q);
    const Rational bb = p.b_ * q.b_;
    return QuadElem(p.a_ * q.a_ + s * bb, p.a_ * q.b_ + p.b_ * q.a_ + r * bb, r, s);
}

bool operator==(const QuadElem& p, const QuadElem& q) {
    if (p.a_ != q.a_ || p.b_ != q.b_) return false;
    return p.is_rational() || (p.r_ == q.r_ && p.s_ == q.s_);
}

Rational QuadElem::norm() const { return a_ * a_ + a_ * b_ * r_ - b_ * b_ * s_; }

QuadElem QuadElem::inverse() const {
    const Rational n = norm();
    if (sgn(n) == 0) throw NonInvertiblePoint("QuadElem is not invertible");
    // The conjugate of alpha is r - alpha.
    return QuadElem((a_ + b_ * r_) / n, -b_ / n, r_, s_);
}

QuadElem QuadElem::pow(long e) const {
    QuadElem base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QuadElem result(1, 0, r_, s_);
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1UL;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string QuadElem::to_string() const {
    std::ostringstream os;
    if (is_rational()) {
        os << a_;
    } else {
        os << a_ << (sgn(b_) < 0 ? " - " : " + ") << abs(b_) << "*a";
    }
    return os.str();
}

QuadElem lp_eval_quad(const LaurentPoly& p, const QuadElem& xv, const QuadElem& yv) {
    QuadElem result = QuadElem::rational(0, xv.r(), xv.s());
    std::map<int, QuadElem> xpow, ypow;
    auto power = [](std::map<int, QuadElem>& cache, const QuadElem& base, int e) -> const QuadElem& {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        if (e < 0 && base.is_zero()) throw NonInvertiblePoint("negative exponent at a zero coordinate");
        return cache.emplace(e, base.pow(e)).first->second;
    };
    for (const auto& t : p.terms()) {
        QuadElem term = power(xpow, xv, t.e.a) * power(ypow, yv, t.e.b);
        result += term * QuadElem::rational(Rational(t.c), term.r(), term.s());
    }
    return result;
}

}  // namespace motzhankel
