#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Error identities carried across the C API boundary as status codes.
enum class errc {
    parse_error,
    var_arity_mismatch,
    zero_polynomial,
    parts_mismatch,
    division_by_zero,
    not_certified_positive,
    certification_failed,
    validation_failed,
    unsupported_argument,
    near_pole,
    tail_divergent,
    unsupported_depth,
    not_factorizable,
    wrong_shape,
    internal_positivity_violation,
    resource_limit,
    invalid_root_of_unity,
    crosscheck_mismatch,
    internal_error,
};

constexpr const char* errc_name(errc code) {
    switch (code) {
        case errc::parse_error: return "ParseError";
        case errc::var_arity_mismatch: return "VarArityMismatch";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::parts_mismatch: return "PartsMismatch";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::not_certified_positive: return "NotCertifiedPositive";
        case errc::certification_failed: return "CertificationFailed";
        case errc::validation_failed: return "ValidationFailed";
        case errc::unsupported_argument: return "UnsupportedArgument";
        case errc::near_pole: return "NearPole";
        case errc::tail_divergent: return "TailDivergent";
        case errc::unsupported_depth: return "UnsupportedDepth";
        case errc::not_factorizable: return "NotFactorizable";
        case errc::wrong_shape: return "WrongShape";
        case errc::internal_positivity_violation: return "InternalPositivityViolation";
        case errc::resource_limit: return "ResourceLimit";
        case errc::invalid_root_of_unity: return "InvalidRootOfUnity";
        case errc::crosscheck_mismatch: return "CrosscheckMismatch";
        case errc::internal_error: return "InternalError";
    }
    return "Error";
}

class MzvError : public std::runtime_error {
public:
    MzvError(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw MzvError(code, message);
}

} // namespace mzv
