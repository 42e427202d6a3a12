#include "gcdpat/error.hpp"

namespace gcdpat {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::DegreeTooSmall: return "degree_too_small";
    case ErrorCode::NotCoprime: return "not_coprime";
    case ErrorCode::FactorizationIncomplete: return "factorization_incomplete";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::ZeroModP: return "zero_mod_p";
    case ErrorCode::NotMonic: return "not_monic";
    case ErrorCode::NotSimpleRoot: return "not_simple_root";
    case ErrorCode::NotARoot: return "not_a_root";
    case ErrorCode::NotSplitSimple: return "not_split_simple";
    case ErrorCode::BothZero: return "both_zero";
    case ErrorCode::PrereqViolated: return "prereq_violated";
    case ErrorCode::PreconditionViolated: return "precondition_violated";
    case ErrorCode::WrongValuation: return "wrong_valuation";
    case ErrorCode::ModulusMismatch: return "modulus_mismatch";
    case ErrorCode::WindowTooShort: return "window_too_short";
    case ErrorCode::ScanCapExceeded: return "scan_cap_exceeded";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace gcdpat
