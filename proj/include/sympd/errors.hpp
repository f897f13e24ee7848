#ifndef SYMPD_ERRORS_HPP
#define SYMPD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympd {

enum class errc {
    not_contraction,
    singular_resolvent,
    zero_alpha,
    not_hermitian,
    pole_hit,
    pole_on_disc,
    q_on_boundary,
    dimension_too_small,
    determinant_mismatch,
    length_mismatch,
    hypothesis_violated,
    nu_out_of_range,
    zero_u,
    q_not_contractive,
    q_constraint_violated,
    outside_disc,
    det_inconsistent,
    degenerate_target,
    factorization_failed,
    not_schur,
    no_convergence,
    zero_polynomial,
    root_on_origin_missing,
    not_interior,
    node_not_in_ball,
    duplicate_nodes,
    bad_input,
};

inline std::string_view errc_name(errc c)
{
    switch (c) {
    case errc::not_contraction:        return "NotContraction";
    case errc::singular_resolvent:     return "SingularResolvent";
    case errc::zero_alpha:             return "ZeroAlpha";
    case errc::not_hermitian:          return "NotHermitian";
    case errc::pole_hit:               return "PoleHit";
    case errc::pole_on_disc:           return "PoleOnDisc";
    case errc::q_on_boundary:          return "QOnBoundary";
    case errc::dimension_too_small:    return "DimensionTooSmall";
    case errc::determinant_mismatch:   return "DeterminantMismatch";
    case errc::length_mismatch:        return "LengthMismatch";
    case errc::hypothesis_violated:    return "HypothesisViolated";
    case errc::nu_out_of_range:        return "NuOutOfRange";
    case errc::zero_u:                 return "ZeroU";
    case errc::q_not_contractive:      return "QNotContractive";
    case errc::q_constraint_violated:  return "QConstraintViolated";
    case errc::outside_disc:           return "OutsideDisc";
    case errc::det_inconsistent:       return "DetInconsistent";
    case errc::degenerate_target:      return "DegenerateTarget";
    case errc::factorization_failed:   return "FactorizationFailed";
    case errc::not_schur:              return "NotSchur";
    case errc::no_convergence:         return "NoConvergence";
    case errc::zero_polynomial:        return "ZeroPolynomial";
    case errc::root_on_origin_missing: return "RootOnOriginMissing";
    case errc::not_interior:           return "NotInterior";
    case errc::node_not_in_ball:       return "NodeNotInBall";
    case errc::duplicate_nodes:        return "DuplicateNodes";
    case errc::bad_input:              return "BadInput";
    }
    return "Unknown";
}

/// Domain error carrying a machine-readable code plus a human message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message, const std::string& context = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + message +
                             (context.empty() ? "" : " [" + context + "]")),
          code_(code), message_(message), context_(context)
    {
    }

    errc code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& context() const noexcept { return context_; }

private:
    errc code_;
    std::string message_;
    std::string context_;
};

[[noreturn]] inline void raise(errc code, const std::string& message,
                               const std::string& context = {})
{
    throw error(code, message, context);
}

} // namespace sympd

#endif
