#include "motzhankel/closedform.hpp"

#include "motzhankel/errors.hpp"
#include "motzhankel/hankel.hpp"
#include "motzhankel/paths.hpp"
#include "motzhankel/quad_elem.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace motzhankel {

namespace {

long choose2(long m) { return m * (m - 1) / 2; }

// One line "n = modulus*n1 + offset [and guard]" of a case distinction.
template <typename V>
struct CaseLine {
    std::function<long(int k)> modulus;
    std::function<long(int k)> offset;
    std::function<bool(int k, long n1)> guard;
    std::function<V(int n, int k, long n1)> value;
};

template <typename V>
struct Resolved {
    ClosedFormCase info;
    V value;
};

template <typename V>
Resolved<V> dispatch(const std::vector<CaseLine<V>>& lines, std::string_view id, int n, int k) {
    if (n < 1 || k < 0) throw PreconditionViolation("closed forms need n >= 1 and k >= 0");
    ClosedFormCase info{std::string(id), n, k, 0, static_cast<int>(n % (k + 1)), 0};
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const auto& line = lines[idx];
        const long mod = line.modulus(k);
        const long rest = n - line.offset(k);
        if (rest < 0 || rest % mod != 0) continue;
        const long n1 = rest / mod;
        if (line.guard && !line.guard(k, n1)) continue;
        info.n1 = static_cast<int>(n1);
        info.case_index = static_cast<int>(idx) + 1;
        return {info, line.value(n, k, n1)};
    }
    return {info, V(0)};
}

long k_plus_1(int k) { return k + 1; }
long zero_offset(int) { return 0; }
long one_offset(int) { return 1; }
long k_offset(int k) { return k; }

LaurentPoly signed_xy_power(long sign_exponent, long xy_exponent) {
    return LaurentPoly::monomial(sign_pow(sign_exponent), static_cast<int>(xy_exponent), static_cast<int>(xy_exponent));
}

const LaurentPoly& one_plus_x_one_plus_y() {
    static const LaurentPoly p = (LaurentPoly(1) + LaurentPoly::x()) * (LaurentPoly(1) + LaurentPoly::y());
    return p;
}

const std::vector<CaseLine<LaurentPoly>>& theorem_lines(TheoremId id) {
    using L = CaseLine<LaurentPoly>;
    static const std::vector<L> t1 = {
        {k_plus_1, zero_offset, nullptr,
         [](int, int k, long n1) { return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1)); }},
    };
    static const std::vector<L> t2 = {
        {k_plus_1, zero_offset, nullptr,
         [](int, int k, long n1) {
             return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1)) *
                    geom_quotient(static_cast<int>(n1 + 1), k);
         }},
        {k_plus_1, k_offset, nullptr,
         [](int, int k, long n1) {
             return signed_xy_power(n1 * choose2(k + 1) + choose2(k),
                                    (k + 1L) * (k + 1) * choose2(n1) + n1 * k * (k + 1)) *
                    geom_quotient(static_cast<int>(n1 + 1), k);
         }},
    };
    static const std::vector<L> t3 = {
        {k_plus_1, zero_offset, nullptr,
         [](int n, int k, long n1) { return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1 + 1) - n); }},
        {k_plus_1, one_offset, nullptr,
         [](int, int k, long n1) { return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1 + 1)); }},
    };
    static const std::vector<L> t4 = {
        {k_plus_1, zero_offset, nullptr,
         [](int n, int k, long n1) {
             LaurentPoly bracket = geom_quotient(static_cast<int>(n1 + 1), k);
             if (k % 2 == 0)
                 bracket += geom_quotient(static_cast<int>(n1), k);
             else
                 bracket -= geom_quotient(static_cast<int>(n1), k);
             return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1 + 1) - n) * bracket;
         }},
        {k_plus_1, one_offset, nullptr,
         [](int, int k, long n1) {
             return signed_xy_power(n1 * choose2(k + 1), (k + 1L) * (k + 1) * choose2(n1 + 1)) *
                    one_plus_x_one_plus_y() * geom_quotient(static_cast<int>(n1 + 1), k);
         }},
        {k_plus_1, k_offset, nullptr,
         [](int, int k, long n1) {
             return signed_xy_power((n1 + 1) * choose2(k + 1) + k,
                                    (k + 1L) * (k + 1) * choose2(n1 + 1) + (k * k - 1L) * (n1 + 1)) *
                    one_plus_x_one_plus_y() * geom_quotient(static_cast<int>(n1 + 1), k);
         }},
    };
    switch (id) {
        case TheoremId::T1: return t1;
        case TheoremId::T2: return t2;
        case TheoremId::T3: return t3;
        case TheoremId::T4: return t4;
    }
    throw std::invalid_argument("unknown theorem id");
}

Integer isign(long e) { return sign_pow(e); }

const std::vector<CaseLine<Integer>>& corollary_lines(CorollaryId id) {
    using L = CaseLine<Integer>;
    // Shared by the shift-0 specializations at i, omega and 1.
    static const std::vector<L> shift0 = {
        {k_plus_1, zero_offset, nullptr, [](int, int k, long n1) { return isign(n1 * choose2(k + 1)); }},
        {k_plus_1, one_offset, nullptr, [](int, int k, long n1) { return isign(n1 * choose2(k + 1)); }},
    };
    auto k_mod = [](int m, int r) { return [m, r](int k, long) { return k % m == r; }; };
    auto k_even_n1 = [](bool n1_even) {
        return [n1_even](int k, long n1) { return k % 2 == 0 && (n1 % 2 == 0) == n1_even; };
    };
    static const std::vector<L> c14 = {
        {k_plus_1, zero_offset, k_mod(4, 1), [](int, int, long n1) { return Integer(2 * n1 + 1); }},
        {k_plus_1, zero_offset, k_mod(4, 3), [](int, int, long) { return Integer(1); }},
        {k_plus_1, zero_offset, k_even_n1(true), [](int, int, long n1) { return isign(n1 / 2); }},
        {k_plus_1, zero_offset, k_even_n1(false), [](int, int k, long n1) { return isign((k + n1 - 1) / 2); }},
        {k_plus_1, one_offset, k_mod(2, 1), [](int, int, long n1) { return Integer(2 * n1 + 2); }},
        {k_plus_1, one_offset, k_even_n1(true), [](int, int, long n1) { return Integer(2 * isign(n1 / 2)); }},
        {k_plus_1, k_offset, k_mod(2, 1), [](int, int k, long n1) { return Integer(isign((k - 1) / 2) * (2 * n1 + 2)); }},
        {k_plus_1, k_offset, k_even_n1(true), [](int, int k, long n1) { return Integer(2 * isign((k + n1) / 2)); }},
    };
    auto m3 = [](int k, long) { return k % 3 == 2; };
    auto not_m3 = [](int k, long) { return k % 3 != 2; };
    auto k3 = [](int k) { return 3L * k + 3; };
    auto K2 = [](int k) { return choose2(k + 2); };
    static const std::vector<L> c16 = {
        {k_plus_1, zero_offset, m3, [K2](int, int k, long n1) { return isign(n1 * K2(k)); }},
        {k3, zero_offset, not_m3, [K2](int, int k, long n1) { return isign(n1 * K2(k)); }},
        {k3, [](int k) { return k + 1L; }, not_m3,
         [K2](int, int k, long n1) { return Integer(2 * isign((n1 + 1) * K2(k) + 1)); }},
        {k3, [](int k) { return 2L * k + 2; }, not_m3, [K2](int, int k, long n1) { return isign(n1 * K2(k)); }},
        {k_plus_1, one_offset, m3, [K2](int, int k, long n1) { return Integer(3 * isign(n1 * K2(k)) * (n1 + 1)); }},
        {k3, one_offset, not_m3, [K2](int, int k, long n1) { return Integer(3 * isign(n1 * K2(k))); }},
        {k3, [](int k) { return k + 2L; }, not_m3,
         [K2](int, int k, long n1) { return Integer(3 * isign((n1 + 1) * K2(k) + 1)); }},
        {k_plus_1, k_offset, m3,
         [K2](int, int k, long n1) { return Integer(3 * isign((n1 + 1) * K2(k) + 1) * (n1 + 1)); }},
        {k3, k_offset, not_m3, [K2](int, int k, long n1) { return Integer(3 * isign((n1 + 1) * K2(k) + 1)); }},
        {k3, [](int k) { return 2L * k + 1; }, not_m3,
         [K2](int, int k, long n1) { return Integer(3 * isign((n1 + 1) * K2(k))); }},
    };
    static const std::vector<L> c18 = {
        {k_plus_1, zero_offset, k_mod(2, 0),
         [](int, int k, long n1) { return Integer(isign(n1 * choose2(k + 1)) * (2 * n1 + 1)); }},
        {k_plus_1, zero_offset, k_mod(2, 1), [](int, int k, long n1) { return isign(n1 * choose2(k + 1)); }},
        {k_plus_1, one_offset, nullptr,
         [](int, int k, long n1) { return Integer(isign(n1 * choose2(k + 1)) * (4 * n1 + 4)); }},
        {k_plus_1, k_offset, nullptr,
         [](int, int k, long n1) { return Integer(isign((n1 + 1) * choose2(k + 1) + k) * (4 * n1 + 4)); }},
    };
    static const std::vector<L> t19 = {
        {k_plus_1, zero_offset, nullptr,
         [](int, int k, long n1) { return Integer(isign(n1 * choose2(k + 1) + 1) * (n1 - 1)); }},
        {k_plus_1, one_offset, nullptr,
         [](int, int k, long n1) { return Integer(isign(n1 * choose2(k + 1) + k + 1) * n1); }},
    };
    switch (id) {
        case CorollaryId::C13:
        case CorollaryId::C15:
        case CorollaryId::C17: return shift0;
        case CorollaryId::C14: return c14;
        case CorollaryId::C16: return c16;
        case CorollaryId::C18: return c18;
        case CorollaryId::T19: return t19;
    }
    throw std::invalid_argument("unknown corollary id");
}

struct Specialization {
    TheoremId theorem;
    SpecPoint point;
};

Specialization specialization_of(CorollaryId id) {
    switch (id) {
        case CorollaryId::C13: return {TheoremId::T3, SpecPoint::I};
        case CorollaryId::C14: return {TheoremId::T4, SpecPoint::I};
        case CorollaryId::C15: return {TheoremId::T3, SpecPoint::Omega};
        case CorollaryId::C16: return {TheoremId::T4, SpecPoint::Omega};
        case CorollaryId::C17: return {TheoremId::T3, SpecPoint::One};
        case CorollaryId::C18: return {TheoremId::T4, SpecPoint::One};
        case CorollaryId::T19: return {TheoremId::T3, SpecPoint::MinusOne};
    }
    throw std::invalid_argument("unknown corollary id");
}

Integer to_integer(const QuadElem& v, std::string_view what) {
    if (!v.is_rational() || v.a().get_den() != 1)
        throw CaseTableMismatch(std::string(what) + " specializes to a non-integer value " + v.to_string());
    return v.a().get_num();
}

}  // namespace

LaurentPoly geom_quotient(int m, int k) {
    if (m < 0) throw PreconditionViolation("geom_quotient needs m >= 0");
    std::vector<Term> terms;
    const int step = k + 1;
    for (int j = 0; j < m; ++j) terms.push_back(Term{{step * j, step * (m - 1 - j)}, Integer(1)});
    return LaurentPoly::from_terms(std::move(terms));
}

ClosedFormCase resolve_theorem_case(TheoremId id, int n, int k) {
    return dispatch(theorem_lines(id), to_string(id), n, k).info;
}

LaurentPoly theorem_rhs(TheoremId id, int n, int k) { return dispatch(theorem_lines(id), to_string(id), n, k).value; }

ClosedFormCase resolve_corollary_case(CorollaryId id, int n, int k) {
    return dispatch(corollary_lines(id), to_string(id), n, k).info;
}

Integer corollary_literal(CorollaryId id, int n, int k) {
    return dispatch(corollary_lines(id), to_string(id), n, k).value;
}

Integer corollary_specialized(CorollaryId id, int n, int k) {
    const auto [theorem, point] = specialization_of(id);
    const auto [xv, yv] = spec_point_values(point);
    const Integer full = to_integer(lp_eval_quad(theorem_rhs(theorem, n, k), xv, yv), to_string(theorem));
    if (id != CorollaryId::T19) return full;

    // Row-0 linearity: the zero-corner determinant is the full determinant
    // minus the minor on rows/columns 1..n-1, up to the sign (-1)^{nk}.
    IntMatrix minor(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) minor(i - 1, j - 1) = spec_prefix_int(SpecPoint::MinusOne, i + j, k);
    Integer value = full - det_bareiss(minor);
    if ((static_cast<long>(n) * k) % 2 != 0) value = -value;
    return value;
}

CorollaryEvaluation evaluate_corollary(CorollaryId id, int n, int k) {
    CorollaryEvaluation ev;
    auto resolved = dispatch(corollary_lines(id), to_string(id), n, k);
    ev.literal = resolved.value;
    ev.literal_case = resolved.info;
    ev.specialized = corollary_specialized(id, n, k);
    ev.agree = ev.literal == ev.specialized;
    return ev;
}

Integer corollary_rhs(CorollaryId id, int n, int k) {
    CorollaryEvaluation ev = evaluate_corollary(id, n, k);
    if (!ev.agree)
        throw CaseTableMismatch(std::string(to_string(id)) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                ": case table gives " + ev.literal.get_str() + ", specialized theorem gives " +
                                ev.specialized.get_str() + " (case line " +
                                std::to_string(ev.literal_case.case_index) + ")");
    return ev.specialized;
}

std::optional<Integer> corollary_printed_special(CorollaryId id, int n, int k) {
    if (id != CorollaryId::C16 || k > 2) return std::nullopt;
    if (n < 1) throw PreconditionViolation("closed forms need n >= 1");
    // Residues are tested exactly as printed, each reduced by the printed modulus 3.
    auto congruent = [n](std::initializer_list<int> residues) {
        for (int r : residues)
            if (n % 3 == r % 3) return true;
        return false;
    };
    const long third = n / 3, sixth = n / 6, ceil_third = (n + 2) / 3;
    switch (k) {
        case 0:
            if (congruent({0, 2})) return Integer(isign(third));
            return Integer(2 * isign(third));
        case 1:
            if (congruent({0, 4})) return Integer(isign(sixth));
            if (congruent({1, 3})) return Integer(3 * isign(sixth));
            if (congruent({2})) return Integer(2 * isign(sixth));
            return Integer(0);
        default:
            if (congruent({0})) return Integer(1);
            if (congruent({1})) return Integer(3 * ceil_third);
            return Integer(-3 * ceil_third);
    }
}

Integer corollary_lhs_entry(CorollaryId id, int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0) throw PreconditionViolation("corollary entries need i, j, k >= 0");
    const int m = i + j;
    Integer sum = 0;
    switch (id) {
        case CorollaryId::C13:
        case CorollaryId::C14: {
            const int top = id == CorollaryId::C13 ? m : m + 1;
            const std::int64_t base = floor_div(top + 1 - k, 2);
            for (int l = 0; l <= k; ++l) sum += binomial(top, base + l);
            return sum;
        }
        case CorollaryId::C15:
        case CorollaryId::C16: {
            const int top = id == CorollaryId::C15 ? m : m + 1;
            for (int ell = 0; 2 * ell <= top + k; ++ell)
                for (int l = -k; l <= k + 1; ++l) sum += trinomial(top, ell, ell + l);
            return sum;
        }
        case CorollaryId::C17:
            for (int l = -k; l <= k + 1; ++l) sum += binomial(2 * m, m + l);
            return sum;
        case CorollaryId::C18:
            for (int l = -k; l <= k + 1; ++l) sum += binomial(2 * m + 2, m + l + 1);
            return sum;
        case CorollaryId::T19: {
            if (m == 0) return 0;
            return exact_div_int(Integer(2 * k + 2) * binomial(2 * m - 1, m + k), m + k + 1);
        }
    }
    throw std::invalid_argument("unknown corollary id");
}

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1: return "T1";
        case TheoremId::T2: return "T2";
        case TheoremId::T3: return "T3";
        case TheoremId::T4: return "T4";
    }
    return "?";
}

std::string_view to_string(CorollaryId id) {
    switch (id) {
        case CorollaryId::C13: return "C13";
        case CorollaryId::C14: return "C14";
        case CorollaryId::C15: return "C15";
        case CorollaryId::C16: return "C16";
        case CorollaryId::C17: return "C17";
        case CorollaryId::C18: return "C18";
        case CorollaryId::T19: return "T19";
    }
    return "?";
}

TheoremId parse_theorem_id(std::string_view name) {
    if (name == "T1") return TheoremId::T1;
    if (name == "T2") return TheoremId::T2;
    if (name == "T3") return TheoremId::T3;
    if (name == "T4") return TheoremId::T4;
    throw std::invalid_argument("unknown theorem id '" + std::string(name) + "'");
}

CorollaryId parse_corollary_id(std::string_view name) {
    for (CorollaryId id : {CorollaryId::C13, CorollaryId::C14, CorollaryId::C15, CorollaryId::C16, CorollaryId::C17,
                           CorollaryId::C18, CorollaryId::T19})
        if (name == to_string(id)) return id;
    throw std::invalid_argument("unknown corollary id '" + std::string(name) + "'");
}

}  // namespace motzhankel
