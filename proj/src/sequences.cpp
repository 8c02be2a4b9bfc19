#include "motzhankel/sequences.hpp"

#include "motzhankel/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace motzhankel {

namespace {

int parse_int(std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v < 0)
        throw std::invalid_argument("expected a nonnegative integer, got '" + std::string(text) + "'");
    return v;
}

}  // namespace

SeqSpec parse_seq_name(std::string_view name, int default_k) {
    using K = SeqSpec::Kind;
    if (name == "prefix") return {K::Prefix, default_k};
    if (name == "restricted0") return {K::Restricted0, default_k};
    if (name == "mp") return {K::MotzkinPrefix, default_k};
    if (name == "motzkin") return {K::Motzkin, 0};
    if (name == "catalan") return {K::Catalan, 0};
    if (name.starts_with("mp_k:")) return {K::MotzkinPrefix, parse_int(name.substr(5))};
    if (name.starts_with("corollary:")) return {K::Band, default_k, parse_corollary_id(name.substr(10))};
    if (name.starts_with("band:")) {
        const auto rest = name.substr(5);
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("band sequence needs band:<id>:<k>");
        return {K::Band, parse_int(rest.substr(colon + 1)), parse_corollary_id(rest.substr(0, colon))};
    }
    throw std::invalid_argument("unknown sequence '" + std::string(name) + "'");
}

bool is_symbolic(const SeqSpec& seq) {
    return seq.kind == SeqSpec::Kind::Prefix || seq.kind == SeqSpec::Kind::Restricted0;
}

LaurentPoly symbolic_element(const SeqSpec& seq, int t) {
    switch (seq.kind) {
        case SeqSpec::Kind::Prefix: return prefix_gf(t, seq.k);
        case SeqSpec::Kind::Restricted0: return gf_restricted(t, 0, seq.k);
        default: return LaurentPoly(integer_element(seq, t));
    }
}

Integer integer_element(const SeqSpec& seq, int t, std::optional<SpecPoint> point) {
    if (t < 0) throw PreconditionViolation("sequence index must be nonnegative");
    switch (seq.kind) {
        case SeqSpec::Kind::Prefix:
        case SeqSpec::Kind::Restricted0: {
            if (!point) throw PreconditionViolation("symbolic sequence needs a specialization point");
            const auto [xv, yv] = spec_point_values(*point);
            const QuadElem v = lp_eval_quad(symbolic_element(seq, t), xv, yv);
            if (!v.is_rational() || v.a().get_den() != 1)
                throw std::logic_error("specialized value is not an integer: " + v.to_string());
            return v.a().get_num();
        }
        case SeqSpec::Kind::MotzkinPrefix: return spec_prefix_int(SpecPoint::Omega, t, seq.k);
        case SeqSpec::Kind::Motzkin: return motzkin_number(t);
        case SeqSpec::Kind::Catalan: return catalan_number(t);
        case SeqSpec::Kind::Band: return corollary_lhs_entry(seq.band, t, 0, seq.k);
    }
    throw std::invalid_argument("unknown sequence kind");
}

Integer motzkin_number(int n) { return spec_endpoint_int(SpecPoint::Omega, n, 0, 0, true); }

Integer catalan_number(int n) { return exact_div_int(binomial(2 * n, n), n + 1); }

}  // namespace motzhankel
