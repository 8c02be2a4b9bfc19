#include "motzhankel/hankel.hpp"

#include <string>
#include <unordered_map>

namespace motzhankel {

Integer exact_quotient(const Integer& p, const Integer& q) {
    if (sgn(q) == 0 || !mpz_divisible_p(p.get_mpz_t(), q.get_mpz_t()))
        throw NonExactDivision("integer division is not exact");
    Integer r;
    mpz_divexact(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return r;
}

PolyMatrix build_hankel(const HankelSpec& spec) {
    std::vector<LaurentPoly> values;
    const std::size_t count = spec.n == 0 ? 0 : 2 * spec.n - 1;
    values.reserve(count);
    for (std::size_t t = 0; t < count; ++t) values.push_back(spec.entry_source(static_cast<int>(t) + spec.shift));
    PolyMatrix m(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j) m(i, j) = values[i + j];
    return m;
}

IntMatrix build_int_hankel(std::size_t n, int shift, const std::function<Integer(int)>& source) {
    std::vector<Integer> values;
    for (std::size_t t = 0; n > 0 && t < 2 * n - 1; ++t) values.push_back(source(static_cast<int>(t) + shift));
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i + j];
    return m;
}

LaurentPoly det_bareiss(const PolyMatrix& m) { return bareiss_determinant(m); }
Integer det_bareiss(const IntMatrix& m) { return bareiss_determinant(m); }

namespace {

template <typename T>
T cofactor_impl(const SquareMatrix<T>& m, std::size_t bound) {
    const std::size_t n = m.dim();
    if (n > bound)
        throw DimensionTooLarge("cofactor expansion limited to dimension " + std::to_string(bound) + ", got " +
                                std::to_string(n));
    if (n == 0) return T(1);
    // minors[S] = determinant of rows (n - |S|).. n-1 restricted to columns S.
    std::unordered_map<unsigned, T> minors;
    minors.emplace(0U, T(1));
    for (unsigned size = 1; size <= n; ++size) {
        const std::size_t row = n - size;
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
            T acc(0);
            int position = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (1U << j))) continue;
                const T& entry = m(row, j);
                if (!is_zero_value(entry)) {
                    const T& minor = minors.at(mask & ~(1U << j));
                    if (position % 2 == 0)
                        acc += entry * minor;
                    else
                        acc -= entry * minor;
                }
                ++position;
            }
            minors.emplace(mask, std::move(acc));
        }
    }
    return minors.at((1U << n) - 1);
}

}  // namespace

LaurentPoly det_cofactor(const PolyMatrix& m, std::size_t bound) { return cofactor_impl(m, bound); }
Integer det_cofactor(const IntMatrix& m, std::size_t bound) { return cofactor_impl(m, bound); }

std::vector<Integer> hankel_transform(const std::function<Integer(int)>& source, std::size_t count, int shift) {
    std::vector<Integer> values;
    for (std::size_t t = 0; count > 0 && t < 2 * count - 1; ++t) values.push_back(source(static_cast<int>(t) + shift));
    std::vector<Integer> out;
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i + j];
        out.push_back(det_bareiss(m));
    }
    return out;
}

}  // namespace motzhankel
