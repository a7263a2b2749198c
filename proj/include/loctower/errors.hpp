#ifndef LOCTOWER_ERRORS_HPP
#define LOCTOWER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace loctower {

enum class ErrorCode {
    DimensionMismatch,
    CoherenceViolation,
    NonFiniteEntry,
    LevelOutOfRange,
    ChainMismatch,
    NotNormal,
    TableCoverageGap,
    EigensolverFailure,
    UnknownCharacter,
    OutOfDomain,
    BadInput,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DimensionMismatch:  return "DIMENSION_MISMATCH";
        case ErrorCode::CoherenceViolation: return "COHERENCE_VIOLATION";
        case ErrorCode::NonFiniteEntry:     return "NON_FINITE_ENTRY";
        case ErrorCode::LevelOutOfRange:    return "LEVEL_OUT_OF_RANGE";
        case ErrorCode::ChainMismatch:      return "CHAIN_MISMATCH";
        case ErrorCode::NotNormal:          return "NOT_NORMAL";
        case ErrorCode::TableCoverageGap:   return "TABLE_COVERAGE_GAP";
        case ErrorCode::EigensolverFailure: return "EIGENSOLVER_FAILURE";
        case ErrorCode::UnknownCharacter:   return "UNKNOWN_CHARACTER";
        case ErrorCode::OutOfDomain:        return "OUT_OF_DOMAIN";
        case ErrorCode::BadInput:           return "BAD_INPUT";
    }
    return "UNKNOWN";
}

/// Library-wide exception carrying a stable string code plus free-form context.
class TowerError : public std::runtime_error {
public:
    TowerError(ErrorCode code, std::string message, std::string context = {})
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), message_(std::move(message)), context_(std::move(context)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& context() const noexcept { return context_; }

private:
    ErrorCode code_;
    std::string message_;
    std::string context_;
};

}  // namespace loctower

#endif
