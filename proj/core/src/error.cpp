#include "skewroos/error.hpp"

namespace skewroos {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::NotPrimePower: return "not_prime_power";
    case ErrorCode::DegreeMismatch: return "degree_mismatch";
    case ErrorCode::NotPrimitive: return "not_primitive";
    case ErrorCode::BadEmbedding: return "bad_embedding";
    case ErrorCode::ElementNotInField: return "element_not_in_field";
    case ErrorCode::ZeroElement: return "zero_element";
    case ErrorCode::NoSolution: return "no_solution";
    case ErrorCode::RingMismatch: return "ring_mismatch";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::NotMuClosed: return "not_mu_closed";
    case ErrorCode::NotNormal: return "not_normal";
    case ErrorCode::NotADivisor: return "not_a_divisor";
    case ErrorCode::RankDeficient: return "rank_deficient";
    case ErrorCode::MalformedCertificate: return "malformed_certificate";
    case ErrorCode::EmptyOrFullSet: return "empty_or_full_set";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::TooLarge: return "too_large";
    case ErrorCode::ZeroCode: return "zero_code";
    case ErrorCode::CoefficientOutsideF: return "coefficient_outside_f";
    case ErrorCode::InvariantViolation: return "invariant_violation";
  }
  return "unknown";
}

}  // namespace skewroos
