#include "motzhankel/hypergeom.hpp"

#include "motzhankel/errors.hpp"

#include <string>

namespace motzhankel {

namespace {

bool is_nonpositive_integer(const Rational& q) { return q.get_den() == 1 && sgn(q) <= 0; }

}  // namespace

Rational pochhammer(const Rational& a, unsigned m) {
    Rational r = 1;
    for (unsigned i = 0; i < m; ++i) r *= a + i;
    return r;
}

std::optional<unsigned> termination_index(const HyperSeries& h) {
    std::optional<unsigned> best;
    for (const auto& p : h.upper) {
        if (!is_nonpositive_integer(p)) continue;
        const unsigned idx = static_cast<unsigned>(Integer(-p.get_num()).get_ui());
        if (!best || idx < *best) best = idx;
    }
    return best;
}

HyperSum eval_terminating_detailed(const HyperSeries& h) {
    const auto last = termination_index(h);
    if (!last) throw PreconditionViolation("series does not terminate");
    // Term l uses lower factors b, b+1, ..., b+l-1.
    for (const auto& b : h.lower) {
        if (!is_nonpositive_integer(b)) continue;
        const Integer hit = -b.get_num();
        if (hit < *last) throw LowerParamZeroDivision("lower parameter " + b.get_str() + " vanishes within the summation range");
    }
    HyperSum out;
    Rational term = 1;
    out.value = 0;
    for (unsigned l = 0;; ++l) {
        out.value += term;
        ++out.terms;
        if (l == *last) break;
        for (const auto& a : h.upper) term *= a + l;
        for (const auto& b : h.lower) term /= b + l;
        term *= h.argument;
        term /= l + 1;
    }
    return out;
}

Rational eval_terminating(const HyperSeries& h) { return eval_terminating_detailed(h).value; }

bool check_chu_vandermonde(const Rational& a, unsigned N, const Rational& c) {
    const Rational lhs = eval_terminating(HyperSeries{{a, Rational(-static_cast<long>(N))}, {c}, 1});
    const Rational denom = pochhammer(c, N);
    if (sgn(denom) == 0) throw LowerParamZeroDivision("(c)_N vanishes");
    return lhs == pochhammer(c - a, N) / denom;
}

HyperSeries lemma10_series(unsigned n, const Rational& A, const Rational& B) {
    const Rational half(1, 2);
    const Rational nn = n;
    return HyperSeries{{-nn * half, half - nn * half, -A, A + B}, {1 - nn, B * half, half + B * half}, 1};
}

Rational lemma10_rhs(unsigned n, const Rational& A, const Rational& B) {
    const Rational denom = pochhammer(B, n);
    if (sgn(denom) == 0) throw LowerParamZeroDivision("(B)_n vanishes");
    return (pochhammer(A + B, n) + pochhammer(-A, n)) / denom;
}

bool check_lemma10(unsigned n, const Rational& A, const Rational& B) {
    if (n == 0) throw PreconditionViolation("the 4F3 summation needs n >= 1");
    return eval_terminating(lemma10_series(n, A, B)) == lemma10_rhs(n, A, B);
}

bool check_contiguous_5f4(const std::vector<Rational>& upper, const std::vector<Rational>& lower) {
    if (upper.size() != 5 || lower.size() != 4) throw PreconditionViolation("contiguous relation needs a 5F4");
    const Rational& a = upper[0];
    const Rational& b = upper[1];
    const Rational& c = upper[2];
    if (a == b || c == 1) throw PreconditionViolation("contiguous relation needs a != b and c != 1");
    auto series = [&](Rational a2, Rational b2, Rational c2) {
        std::vector<Rational> up = upper;
        up[0] = std::move(a2);
        up[1] = std::move(b2);
        up[2] = std::move(c2);
        return eval_terminating(HyperSeries{up, lower, 1});
    };
    const Rational lhs = series(a, b, c);
    const Rational rhs = b * (c - a - 1) / ((b - a) * (c - 1)) * series(a, b + 1, c - 1) +
                         a * (c - b - 1) / ((a - b) * (c - 1)) * series(a + 1, b, c - 1);
    return lhs == rhs;
}

}  // namespace motzhankel
