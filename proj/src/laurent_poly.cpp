#include "motzhankel/laurent_poly.hpp"

#include "motzhankel/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace motzhankel {

namespace {

bool term_order(const Term& l, const Term& r) { return grlex_greater(l.e, r.e); }

// Dense coefficient buffer over an exponent bounding box.
class DenseBox {
public:
    DenseBox(int amin, int amax, int bmin, int bmax)
        : amin_(amin), amax_(amax), bmin_(bmin), bmax_(bmax),
          width_(amax - amin + 1), data_(static_cast<std::size_t>(amax - amin + 1) * (bmax - bmin + 1)) {}

    bool contains(int a, int b) const { return a >= amin_ && a <= amax_ && b >= bmin_ && b <= bmax_; }
    mpz_class& at(int a, int b) { return data_[static_cast<std::size_t>(b - bmin_) * width_ + (a - amin_)]; }

    // Emits the nonzero entries in descending graded-lex order.
    template <typename F>
    void for_each_descending(F&& f) {
        for (int d = amax_ + bmax_; d >= amin_ + bmin_; --d) {
            const int ahi = std::min(amax_, d - bmin_);
            const int alo = std::max(amin_, d - bmax_);
            for (int a = ahi; a >= alo; --a) {
                if (!f(a, d - a, at(a, d - a))) return;
            }
        }
    }

    std::vector<Term> collect() {
        std::vector<Term> out;
        for_each_descending([&](int a, int b, mpz_class& c) {
            if (sgn(c) != 0) out.push_back(Term{{a, b}, std::move(c)});
            return true;
        });
        return out;
    }

private:
    int amin_, amax_, bmin_, bmax_;
    std::size_t width_;
    std::vector<mpz_class> data_;
};

constexpr std::size_t kMaxDenseBox = std::size_t{1} << 22;

std::size_t box_size(long wa, long wb) { return static_cast<std::size_t>(wa) * static_cast<std::size_t>(wb); }

std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q, bool negate_q) {
    std::vector<Term> out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < q.size()) {
        if (j == q.size() || (i < p.size() && grlex_greater(p[i].e, q[j].e))) {
            out.push_back(p[i++]);
        } else if (i == p.size() || grlex_greater(q[j].e, p[i].e)) {
            out.push_back(Term{q[j].e, negate_q ? Integer(-q[j].c) : q[j].c});
            ++j;
        } else {
            Integer c = negate_q ? Integer(p[i].c - q[j].c) : Integer(p[i].c + q[j].c);
            if (sgn(c) != 0) out.push_back(Term{p[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back(Term{{0, 0}, Integer(c)});
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (sgn(c) != 0) terms_.push_back(Term{{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int a, int b) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back(Term{{a, b}, c});
    return p;
}

LaurentPoly LaurentPoly::x() { return monomial(1, 1, 0); }
LaurentPoly LaurentPoly::y() { return monomial(1, 0, 1); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_order);
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().e == t.e) {
            p.terms_.back().c += t.c;
            if (sgn(p.terms_.back().c) == 0) p.terms_.pop_back();
        } else if (sgn(t.c) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exponent{0, 0});
}

Integer LaurentPoly::coeff(int a, int b) const {
    const Exponent e{a, b};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& key) { return grlex_greater(t.e, key); });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
}

int LaurentPoly::min_a() const {
    int r = std::numeric_limits<int>::max();
    for (const auto& t : terms_) r = std::min(r, t.e.a);
    return r;
}
int LaurentPoly::max_a() const {
    int r = std::numeric_limits<int>::min();
    for (const auto& t : terms_) r = std::max(r, t.e.a);
    return r;
}
int LaurentPoly::min_b() const {
    int r = std::numeric_limits<int>::max();
    for (const auto& t : terms_) r = std::min(r, t.e.b);
    return r;
}
int LaurentPoly::max_b() const {
    int r = std::numeric_limits<int>::min();
    for (const auto& t : terms_) r = std::max(r, t.e.b);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    if (q.is_zero()) return *this;
    terms_ = merge(terms_, q.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    if (q.is_zero()) return *this;
    terms_ = merge(terms_, q.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    r += q;
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    r -= q;
    return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (p.size() < q.size()) return q * p;
    if (q.is_monomial()) {
        // Shifting by a monomial preserves the graded-lex order.
        LaurentPoly r = p;
        const Term& m = q.terms_.front();
        for (auto& t : r.terms_) {
            t.e.a += m.e.a;
            t.e.b += m.e.b;
            t.c *= m.c;
        }
        return r;
    }
    const int amin = p.min_a() + q.min_a();
    const int amax = p.max_a() + q.max_a();
    const int bmin = p.min_b() + q.min_b();
    const int bmax = p.max_b() + q.max_b();
    if (box_size(amax - amin + 1L, bmax - bmin + 1L) > kMaxDenseBox) {
        std::vector<Term> prods;
        prods.reserve(p.size() * q.size());
        for (const auto& s : p.terms_)
            for (const auto& t : q.terms_) prods.push_back(Term{{s.e.a + t.e.a, s.e.b + t.e.b}, s.c * t.c});
        return LaurentPoly::from_terms(std::move(prods));
    }
    DenseBox box(amin, amax, bmin, bmax);
    for (const auto& s : p.terms_)
        for (const auto& t : q.terms_)
            mpz_addmul(box.at(s.e.a + t.e.a, s.e.b + t.e.b).get_mpz_t(), s.c.get_mpz_t(), t.c.get_mpz_t());
    LaurentPoly r;
    r.terms_ = box.collect();
    return r;
}

LaurentPoly LaurentPoly::shifted(int a, int b) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.e.a += a;
        t.e.b += b;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = sgn(t.c) < 0;
        Integer mag = abs(t.c);
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        const bool is_const = t.e.a == 0 && t.e.b == 0;
        if (mag != 1 || is_const) factors.push_back(mag.get_str());
        if (t.e.a != 0) factors.push_back(t.e.a == 1 ? "x" : "x^" + std::to_string(t.e.a));
        if (t.e.b != 0) factors.push_back(t.e.b == 1 ? "y" : "y^" + std::to_string(t.e.b));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_div_monomial(const LaurentPoly& p, int a, int b) { return p.shifted(-a, -b); }

LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw NonExactDivision("division by the zero polynomial");
    if (p.is_zero()) return {};
    if (q.is_monomial()) {
        const Term& m = q.leading();
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto& t : p.terms()) {
            if (!mpz_divisible_p(t.c.get_mpz_t(), m.c.get_mpz_t()))
                throw NonExactDivision("coefficient not divisible by monomial divisor");
            Integer c;
            mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), m.c.get_mpz_t());
            out.push_back(Term{{t.e.a - m.e.a, t.e.b - m.e.b}, std::move(c)});
        }
        return LaurentPoly::from_terms(std::move(out));
    }

    // Long division in graded-lex order on a dense copy of p. For an exact
    // quotient every subtracted multiple of q stays inside p's bounding box,
    // so a single descending sweep suffices.
    const int amin = p.min_a(), amax = p.max_a(), bmin = p.min_b(), bmax = p.max_b();
    const int qamin = q.min_a(), qamax = q.max_a(), qbmin = q.min_b(), qbmax = q.max_b();
    if (qamax - qamin > amax - amin || qbmax - qbmin > bmax - bmin)
        throw NonExactDivision("divisor support exceeds dividend support");
    if (box_size(amax - amin + 1L, bmax - bmin + 1L) > kMaxDenseBox)
        throw NonExactDivision("dividend too large for dense division buffer");

    DenseBox rem(amin, amax, bmin, bmax);
    for (const auto& t : p.terms()) rem.at(t.e.a, t.e.b) = t.c;

    const Term& lt = q.leading();
    std::vector<Term> quotient;
    Integer qc;
    rem.for_each_descending([&](int a, int b, mpz_class& c) {
        if (sgn(c) == 0) return true;
        const int ma = a - lt.e.a;
        const int mb = b - lt.e.b;
        if (ma + qamin < amin || ma + qamax > amax || mb + qbmin < bmin || mb + qbmax > bmax)
            throw NonExactDivision("nonzero remainder in exact division");
        if (!mpz_divisible_p(c.get_mpz_t(), lt.c.get_mpz_t()))
            throw NonExactDivision("leading coefficient does not divide remainder");
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lt.c.get_mpz_t());
        for (const auto& t : q.terms())
            mpz_submul(rem.at(ma + t.e.a, mb + t.e.b).get_mpz_t(), qc.get_mpz_t(), t.c.get_mpz_t());
        quotient.push_back(Term{{ma, mb}, qc});
        return true;
    });
    // Quotient terms are produced in descending order already.
    return LaurentPoly::from_terms(std::move(quotient));
}

LaurentPoly level_weight_pow(unsigned n) {
    std::vector<Term> terms;
    terms.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) terms.push_back(Term{{static_cast<int>(n - i), static_cast<int>(i)}, binomial(n, i)});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly down_weight_pow(unsigned n) { return LaurentPoly::monomial(1, static_cast<int>(n), static_cast<int>(n)); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace motzhankel
