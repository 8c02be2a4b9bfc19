#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace motzhankel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(u, v), zero when v < 0. Negative u with v >= 0
/// uses the polynomial extension (-1)^v C(v-u-1, v).
inline Integer binomial(std::int64_t u, std::int64_t v) {
    if (v < 0) return 0;
    Integer r;
    if (u >= 0) {
        if (v > u) return 0;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(v));
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(v - u - 1), static_cast<unsigned long>(v));
    return (v % 2 == 0) ? r : Integer(-r);
}

inline Integer factorial(std::int64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// n! / (k1! k2! (n-k1-k2)!), zero if any argument is negative.
inline Integer trinomial(std::int64_t n, std::int64_t k1, std::int64_t k2) {
    if (n < 0 || k1 < 0 || k2 < 0 || k1 + k2 > n) return 0;
    return binomial(n, k1) * binomial(n - k1, k2);
}

/// p / d where d is known to divide p.
inline Integer exact_div_int(const Integer& p, long d) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), p.get_mpz_t(), Integer(d).get_mpz_t());
    return r;
}

inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

// Floor division for possibly negative numerators.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace motzhankel
