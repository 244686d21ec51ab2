#ifndef HBCK_ERROR_HPP
#define HBCK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hbck {

enum class ErrorCode {
    Syntax,
    MissingField,
    BadLabel,
    DuplicateLabel,
    UnknownLabel,
    EmptyCell,
    NonTotalTable,
    BadRational,
    MuOutOfRange,
    MuIncomplete,
    EmptySubset,
    NotSubalgebra,
    NotHom,
    NotFuzzyHom,
    Mismatch,
    SizeBound,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Bad input: malformed documents, unknown labels, violated preconditions.
/// `line` is 1-based and 0 when no source position applies.
class InputError : public std::runtime_error {
public:
    InputError(ErrorCode code, const std::string& message, std::size_t line = 0,
               std::size_t column = 0);

    ErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ErrorCode code_;
    std::size_t line_;
    std::size_t column_;
};

/// A concrete instance contradicting a claim that the constructions rely on,
/// e.g. a congruence meet that is not regular, or an agreement set that is
/// not closed under the hyperoperation. `witness` is a human-readable dump.
class ClaimViolation : public std::runtime_error {
public:
    ClaimViolation(std::string claim, std::string witness);

    const std::string& claim() const noexcept { return claim_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string claim_;
    std::string witness_;
};

} // namespace hbck

#endif // HBCK_ERROR_HPP
