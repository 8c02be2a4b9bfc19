#include "motzhankel/paths.hpp"

#include "motzhankel/errors.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace motzhankel {

namespace {

void require_nonnegative(int k, int l) {
    if (k < 0 || l < 0)
        throw NegativeHeight("restricted paths need nonnegative heights, got k=" + std::to_string(k) +
                             ", l=" + std::to_string(l));
}

// coeff * (x+y)^e * (xy)^s expanded into terms.
void append_level_down(std::vector<Term>& out, const Integer& coeff, int e, int s) {
    for (int i = 0; i <= e; ++i) out.push_back(Term{{e - i + s, i + s}, coeff * binomial(e, i)});
}

// Heights lo..lo+values.size()-1 reachable after a fixed number of steps.
struct HeightRow {
    int lo = 0;
    std::vector<LaurentPoly> values;

    const LaurentPoly* find(int h) const {
        if (h < lo || h >= lo + static_cast<int>(values.size())) return nullptr;
        return &values[static_cast<std::size_t>(h - lo)];
    }
};

class DpTable {
public:
    LaurentPoly lookup(int n, int k, int l, bool restricted) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& rows = table_[{k, restricted}];
        if (rows.empty()) rows.push_back(HeightRow{k, {LaurentPoly(1)}});
        const LaurentPoly level = LaurentPoly::x() + LaurentPoly::y();
        const LaurentPoly down = LaurentPoly::monomial(1, 1, 1);
        while (static_cast<int>(rows.size()) <= n) {
            const HeightRow& prev = rows.back();
            const int t = static_cast<int>(rows.size());
            HeightRow next;
            next.lo = restricted ? 0 : k - t;
            const int hi = k + t;
            for (int h = next.lo; h <= hi; ++h) {
                LaurentPoly v;
                if (const auto* p = prev.find(h - 1)) v += *p;
                if (const auto* p = prev.find(h)) v += *p * level;
                if (const auto* p = prev.find(h + 1)) v += *p * down;
                next.values.push_back(std::move(v));
            }
            rows.push_back(std::move(next));
        }
        const auto* v = rows[static_cast<std::size_t>(n)].find(l);
        return v ? *v : LaurentPoly();
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, bool>, std::vector<HeightRow>> table_;
};

DpTable& dp_table() {
    static DpTable table;
    return table;
}

}  // namespace

LaurentPoly gf_unrestricted(int n, int k, int l) {
    if (n < 0) throw std::invalid_argument("negative step count");
    std::vector<Term> terms;
    for (int s = 0; 2 * s <= n - l + k; ++s) {
        if (s + l - k < 0) continue;
        append_level_down(terms, trinomial(n, s, s + l - k), n - l + k - 2 * s, s);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly gf_restricted(int n, int k, int l) {
    require_nonnegative(k, l);
    if (n < 0) throw std::invalid_argument("negative step count");
    std::vector<Term> terms;
    for (int s = 0; 2 * s <= n - l + k; ++s) {
        const int u = l - k + 2 * s;
        const Integer c = binomial(n, u) * (binomial(u, s) - binomial(u, s - k - 1));
        if (sgn(c) != 0) append_level_down(terms, c, n - l + k - 2 * s, s);
    }
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly gf_dp(int n, int k, int l, bool restricted) {
    if (restricted) require_nonnegative(k, l);
    if (n < 0) throw std::invalid_argument("negative step count");
    if (std::abs(l - k) > n) return {};
    return dp_table().lookup(n, k, l, restricted);
}

LaurentPoly gf_restricted_reflection(int n, int k, int l) {
    require_nonnegative(k, l);
    return gf_unrestricted(n, k, l) - down_weight_pow(static_cast<unsigned>(k + 1)) * gf_unrestricted(n, -k - 2, l);
}

LaurentPoly prefix_gf(int n, int k) {
    if (k < 0) throw NegativeHeight("prefix generating function needs k >= 0");
    LaurentPoly sum;
    for (int l = 0; l <= k + n; ++l) sum += gf_restricted(n, k, l);
    return sum;
}

std::pair<QuadElem, QuadElem> spec_point_values(SpecPoint point) {
    switch (point) {
        case SpecPoint::I:
            return {QuadElem::alpha(0, -1), -QuadElem::alpha(0, -1)};
        case SpecPoint::Omega:
            return {QuadElem::alpha(1, -1), QuadElem(1, -1, 1, -1)};
        case SpecPoint::One:
            return {QuadElem::rational(1), QuadElem::rational(1)};
        case SpecPoint::MinusOne:
            return {QuadElem::rational(-1), QuadElem::rational(-1)};
    }
    throw std::invalid_argument("unknown specialization point");
}

Integer spec_prefix_int(SpecPoint point, int n, int k) {
    if (k < 0) throw NegativeHeight("prefix values need k >= 0");
    Integer sum = 0;
    switch (point) {
        case SpecPoint::I: {
            const std::int64_t base = floor_div(n + 1 - k, 2);
            for (int l = 0; l <= k; ++l) sum += binomial(n, base + l);
            return sum;
        }
        case SpecPoint::Omega:
            for (int ell = 0; 2 * ell <= n + k; ++ell)
                for (int l = -k; l <= k + 1; ++l) sum += trinomial(n, ell, ell + l);
            return sum;
        case SpecPoint::One:
            for (int l = -k; l <= k + 1; ++l) sum += binomial(2 * n, n + l);
            return sum;
        case SpecPoint::MinusOne: {
            if (n == 0) return 1;
            Integer v = exact_div_int(Integer(k + 1) * binomial(2 * n, n + k + 1), n);
            return sign_pow(n + k) * v;
        }
    }
    throw std::invalid_argument("unknown specialization point");
}

Integer spec_endpoint_int(SpecPoint point, int n, int k, int l, bool restricted) {
    if (restricted) require_nonnegative(k, l);
    switch (point) {
        case SpecPoint::I: {
            if ((n + k + l) % 2 != 0) return 0;
            Integer v = binomial(n, (n + l - k) / 2);
            if (restricted) v -= binomial(n, (n + l + k + 2) / 2);
            return v;
        }
        case SpecPoint::Omega: {
            Integer v = 0;
            for (int ell = 0; ell <= n; ++ell) {
                v += trinomial(n, ell, ell + l - k);
                if (restricted) v -= trinomial(n, ell, ell + l + k + 2);
            }
            return v;
        }
        case SpecPoint::One:
        case SpecPoint::MinusOne: {
            Integer v = binomial(2 * n, n + l - k);
            if (restricted) v -= binomial(2 * n, n + l + k + 2);
            if (point == SpecPoint::MinusOne) v *= sign_pow(n + k + l);
            return v;
        }
    }
    throw std::invalid_argument("unknown specialization point");
}

std::string_view to_string(SpecPoint point) {
    switch (point) {
        case SpecPoint::I: return "i";
        case SpecPoint::Omega: return "omega";
        case SpecPoint::One: return "one";
        case SpecPoint::MinusOne: return "minus_one";
    }
    return "?";
}

SpecPoint parse_spec_point(std::string_view name) {
    if (name == "i") return SpecPoint::I;
    if (name == "omega") return SpecPoint::Omega;
    if (name == "one") return SpecPoint::One;
    if (name == "minus_one") return SpecPoint::MinusOne;
    throw std::invalid_argument("unknown specialization point '" + std::string(name) + "'");
}

}  // namespace motzhankel
