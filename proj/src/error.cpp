#include "eqprod/error.hpp"

namespace eqprod {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ProductOverflow: return "ProductOverflow";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::InvalidExtension: return "InvalidExtension";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::UnequalSignatures: return "UnequalSignatures";
    case ErrorCode::InfeasiblePadding: return "InfeasiblePadding";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace eqprod
