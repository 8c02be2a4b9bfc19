#pragma once

#include "motzhankel/laurent_poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motzhankel {

inline bool is_zero_value(const LaurentPoly& p) { return p.is_zero(); }
inline bool is_zero_value(const Integer& z) { return sgn(z) == 0; }

inline LaurentPoly exact_quotient(const LaurentPoly& p, const LaurentPoly& q) { return lp_exact_div(p, q); }
Integer exact_quotient(const Integer& p, const Integer& q);

/// Dense square matrix over an exact ring.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    friend bool operator==(const SquareMatrix& l, const SquareMatrix& r) { return l.n_ == r.n_ && l.data_ == r.data_; }

    friend SquareMatrix operator+(const SquareMatrix& l, const SquareMatrix& r) {
        check_same(l, r);
        SquareMatrix out = l;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += r.data_[i];
        return out;
    }

    friend SquareMatrix operator-(const SquareMatrix& l, const SquareMatrix& r) {
        check_same(l, r);
        SquareMatrix out = l;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= r.data_[i];
        return out;
    }

    // Naive cubic product; skips zero entries of the left factor.
    friend SquareMatrix operator*(const SquareMatrix& l, const SquareMatrix& r) {
        check_same(l, r);
        const std::size_t n = l.n_;
        SquareMatrix out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero_value(l(i, k))) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += l(i, k) * r(k, j);
            }
        return out;
    }

private:
    static void check_same(const SquareMatrix& l, const SquareMatrix& r) {
        if (l.n_ != r.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = SquareMatrix<LaurentPoly>;
using IntMatrix = SquareMatrix<Integer>;

}  // namespace motzhankel
