#pragma once

#include "motzhankel/laurent_poly.hpp"
#include "motzhankel/matrix.hpp"

#include <random>

namespace testing {

using motzhankel::Integer;
using motzhankel::LaurentPoly;
using motzhankel::Term;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(12345);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random Laurent polynomial with up to `max_terms` terms and exponents in [-range, range].
inline LaurentPoly random_poly(int max_terms = 4, int range = 3, int coeff = 9) {
    std::vector<Term> terms;
    const int count = uniform(0, max_terms);
    for (int i = 0; i < count; ++i)
        terms.push_back(Term{{uniform(-range, range), uniform(-range, range)}, Integer(uniform(-coeff, coeff))});
    return LaurentPoly::from_terms(std::move(terms));
}

inline motzhankel::PolyMatrix random_poly_matrix(std::size_t n, int max_terms = 2) {
    motzhankel::PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(max_terms, 2, 5);
    return m;
}

}  // namespace testing
