#include "hbck/error.hpp"

#include <utility>

namespace hbck {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::MissingField: return "missing-field";
    case ErrorCode::BadLabel: return "bad-label";
    case ErrorCode::DuplicateLabel: return "duplicate-label";
    case ErrorCode::UnknownLabel: return "unknown-label";
    case ErrorCode::EmptyCell: return "empty-cell";
    case ErrorCode::NonTotalTable: return "non-total-table";
    case ErrorCode::BadRational: return "bad-rational";
    case ErrorCode::MuOutOfRange: return "mu-out-of-range";
    case ErrorCode::MuIncomplete: return "mu-incomplete";
    case ErrorCode::EmptySubset: return "empty-subset";
    case ErrorCode::NotSubalgebra: return "not-subalgebra";
    case ErrorCode::NotHom: return "not-hom";
    case ErrorCode::NotFuzzyHom: return "not-fuzzy-hom";
    case ErrorCode::Mismatch: return "mismatch";
    case ErrorCode::SizeBound: return "size-bound";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

InputError::InputError(ErrorCode code, const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(message), code_(code), line_(line), column_(column)
{
}

ClaimViolation::ClaimViolation(std::string claim, std::string witness)
    : std::runtime_error("claim violated: " + claim), claim_(std::move(claim)),
      witness_(std::move(witness))
{
}

} // namespace hbck
