#pragma once

#include <stdexcept>
#include <string>

namespace knot {

enum class errc {
    malformed_code,
    bad_arc_multiplicity,
    nonplanar_code,
    unrealizable_code,
    split_or_link_input,
    variable_mismatch,
    zero_polynomial,
    too_large,
    resource_exhausted,
    not_alternating,
    not_reduced,
    not_two_colorable,
    non_integer_result,
    not_a_positive_crossing,
    invalid_site,
    lemma_check_failed,
    empty_interval,
    empty_data,
    not_coprime,
    non_positive,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::malformed_code: return "MalformedCode";
        case errc::bad_arc_multiplicity: return "BadArcMultiplicity";
        case errc::nonplanar_code: return "NonplanarCode";
        case errc::unrealizable_code: return "UnrealizableCode";
        case errc::split_or_link_input: return "SplitOrLinkInput";
        case errc::variable_mismatch: return "VariableMismatch";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::too_large: return "TooLarge";
        case errc::resource_exhausted: return "ResourceExhausted";
        case errc::not_alternating: return "NotAlternating";
        case errc::not_reduced: return "NotReduced";
        case errc::not_two_colorable: return "NotTwoColorable";
        case errc::non_integer_result: return "NonIntegerResult";
        case errc::not_a_positive_crossing: return "NotAPositiveCrossing";
        case errc::invalid_site: return "InvalidSite";
        case errc::lemma_check_failed: return "LemmaCheckFailed";
        case errc::empty_interval: return "EmptyInterval";
        case errc::empty_data: return "EmptyData";
        case errc::not_coprime: return "NotCoprime";
        case errc::non_positive: return "NonPositive";
    }
    return "UnknownError";
}

class knot_error : public std::runtime_error {
public:
    knot_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw knot_error(code, what);
}

} // namespace knot
