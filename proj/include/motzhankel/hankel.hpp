#pragma once

#include "motzhankel/errors.hpp"
#include "motzhankel/matrix.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace motzhankel {

/// Hankel matrix description: entry (i, j) = entry_source(i + j + shift).
struct HankelSpec {
    std::size_t n = 1;
    int shift = 0;
    std::function<LaurentPoly(int)> entry_source;
};

PolyMatrix build_hankel(const HankelSpec& spec);
IntMatrix build_int_hankel(std::size_t n, int shift, const std::function<Integer(int)>& source);

/// Fraction-free (Bareiss) elimination. Every division is exact over an
/// integral domain; a zero pivot is replaced by the first nonzero entry
/// below it, and a column without one makes the determinant zero.
template <typename T>
T bareiss_determinant(SquareMatrix<T> m) {
    const std::size_t n = m.dim();
    if (n == 0) return T(1);
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero_value(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero_value(m(p, k))) ++p;
            if (p == n) return T(0);
            m.swap_rows(k, p);
            negate = !negate;
        }
        const T& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool row_has_lead = !is_zero_value(m(i, k));
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = pivot * m(i, j);
                if (row_has_lead && !is_zero_value(m(k, j))) num -= m(i, k) * m(k, j);
                m(i, j) = exact_quotient(num, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

LaurentPoly det_bareiss(const PolyMatrix& m);
Integer det_bareiss(const IntMatrix& m);

constexpr std::size_t kDefaultCofactorBound = 8;

/// Laplace expansion along successive first rows (memoized over column
/// subsets). Throws DimensionTooLarge above `bound`.
LaurentPoly det_cofactor(const PolyMatrix& m, std::size_t bound = kDefaultCofactorBound);
Integer det_cofactor(const IntMatrix& m, std::size_t bound = kDefaultCofactorBound);

/// Determinants of the leading n x n Hankel matrices for n = 1..count.
std::vector<Integer> hankel_transform(const std::function<Integer(int)>& source, std::size_t count, int shift);

}  // namespace motzhankel
