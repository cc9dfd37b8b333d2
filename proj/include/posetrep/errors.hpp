#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetrep {

enum class ErrorCode {
    DuplicateLabel,
    CycleDetected,
    UnknownElement,
    NotMaximal,
    FieldMismatch,
    ContextMismatch,
    BudgetExceeded,
    UndecidableAtBudget,
    NotFiniteType,
    FieldTooRestrictive,
    InvalidInput,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UndecidableAtBudget: return "UndecidableAtBudget";
    case ErrorCode::NotFiniteType: return "NotFiniteType";
    case ErrorCode::FieldTooRestrictive: return "FieldTooRestrictive";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace posetrep
