#pragma once

#include "motzhankel/integers.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace motzhankel {

/// Terminating series rFs[upper; lower; argument].
struct HyperSeries {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument = 1;
};

/// Rising factorial a (a+1) ... (a+m-1); 1 for m = 0.
Rational pochhammer(const Rational& a, unsigned m);

/// Smallest |p| over upper parameters p that are nonpositive integers, or
/// nullopt if the series does not terminate.
std::optional<unsigned> termination_index(const HyperSeries& h);

struct HyperSum {
    Rational value;
    std::size_t terms = 0;  // number of summands evaluated
};

/// Exact finite sum up to the termination index. Throws
/// PreconditionViolation for a non-terminating series and
/// LowerParamZeroDivision when a lower Pochhammer vanishes in range.
HyperSum eval_terminating_detailed(const HyperSeries& h);
Rational eval_terminating(const HyperSeries& h);

/// 2F1[a, -N; c; 1] against (c-a)_N / (c)_N.
bool check_chu_vandermonde(const Rational& a, unsigned N, const Rational& c);

/// 4F3[-n/2, 1/2-n/2, -A, A+B; 1-n, B/2, 1/2+B/2; 1]
/// against ((A+B)_n + (-A)_n) / (B)_n.
bool check_lemma10(unsigned n, const Rational& A, const Rational& B);
HyperSeries lemma10_series(unsigned n, const Rational& A, const Rational& B);
Rational lemma10_rhs(unsigned n, const Rational& A, const Rational& B);

/// The 5F4 three-term contiguous relation in (a, b, c):
///   F[a,b,c,..] = b(c-a-1)/((b-a)(c-1)) F[a,b+1,c-1,..]
///               + a(c-b-1)/((a-b)(c-1)) F[a+1,b,c-1,..].
/// `upper` = {a, b, c, A1, A2}, `lower` = {B1..B4}.
bool check_contiguous_5f4(const std::vector<Rational>& upper, const std::vector<Rational>& lower);

}  // namespace motzhankel
