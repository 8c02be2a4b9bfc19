#pragma once

#include "motzhankel/closedform.hpp"
#include "motzhankel/laurent_poly.hpp"
#include "motzhankel/paths.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace motzhankel {

/// A named sequence that feeds Hankel matrices or is printed directly.
struct SeqSpec {
    enum class Kind {
        Prefix,          // prefix_gf(t, k)
        Restricted0,     // gf_restricted(t, 0, k)
        MotzkinPrefix,   // MP_t(k), ordinary counts
        Motzkin,         // M_t
        Catalan,         // C_t
        Band,            // corollary_lhs_entry(id, t, 0, k)
    };
    Kind kind = Kind::MotzkinPrefix;
    int k = 0;
    CorollaryId band = CorollaryId::C13;
};

/// Parses "prefix", "restricted0", "mp", "motzkin", "catalan",
/// "corollary:<id>", "mp_k:<k>" and "band:<id>:<k>". `default_k` fills in
/// the start height for names that do not carry one.
SeqSpec parse_seq_name(std::string_view name, int default_k = 0);

bool is_symbolic(const SeqSpec& seq);

/// Element t as a polynomial; integer sequences lift to constants.
LaurentPoly symbolic_element(const SeqSpec& seq, int t);

/// Element t as an integer. Symbolic sequences need a specialization point.
Integer integer_element(const SeqSpec& seq, int t, std::optional<SpecPoint> point = std::nullopt);

Integer motzkin_number(int n);
Integer catalan_number(int n);

}  // namespace motzhankel
