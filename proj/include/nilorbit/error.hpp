#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilorbit {

enum class ErrorCode {
    NotDecreasing,
    ParityViolation,
    NegativeColumn,
    NotGeneric,
    NotSpecialForm,
    SizeMismatch,
    NotMember,
    NoEqualPair,
    InvalidOrthogonal,
    LeadingColumnMissing,
    NotDominant,
    ShapeMismatch,
    RankBudgetExceeded,
    NonIntegralResult,
    BadRequest,
    Overflow,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotDecreasing: return "NotDecreasing";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::NegativeColumn: return "NegativeColumn";
        case ErrorCode::NotGeneric: return "NotGeneric";
        case ErrorCode::NotSpecialForm: return "NotSpecialForm";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::NoEqualPair: return "NoEqualPair";
        case ErrorCode::InvalidOrthogonal: return "InvalidOrthogonal";
        case ErrorCode::LeadingColumnMissing: return "LeadingColumnMissing";
        case ErrorCode::NotDominant: return "NotDominant";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::RankBudgetExceeded: return "RankBudgetExceeded";
        case ErrorCode::NonIntegralResult: return "NonIntegralResult";
        case ErrorCode::BadRequest: return "BadRequest";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw DomainError(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

// Internal-consistency checks.  A failure here means a structural fact the
// construction relies on does not hold for the given input; it is never a
// recoverable user error.
inline void hard_assert(bool cond, const std::string& what) {
    if (!cond) fail(ErrorCode::Internal, what);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer multiplication overflow");
    return r;
}

} // namespace nilorbit
