#ifndef HBCK_FUZZY_VALUE_HPP
#define HBCK_FUZZY_VALUE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace hbck {

/// Exact membership degree in [0,1], kept in lowest terms.
///
/// Only comparisons are needed by the fuzzy layer (min, max and >= tests), so
/// no arithmetic is provided. Comparison cross-multiplies in 128 bits and
/// cannot overflow.
class FuzzyValue {
public:
    constexpr FuzzyValue() noexcept = default;

    /// Throws InputError(BadRational) for a zero denominator and
    /// InputError(MuOutOfRange) when numerator > denominator.
    FuzzyValue(std::uint64_t numerator, std::uint64_t denominator);

    static constexpr FuzzyValue zero() noexcept { return FuzzyValue{}; }
    static FuzzyValue one() noexcept { return FuzzyValue(1, 1); }

    /// Accepts "p/q" or a bare integer ("0", "1").
    static FuzzyValue parse(std::string_view text);

    std::uint64_t numerator() const noexcept { return num_; }
    std::uint64_t denominator() const noexcept { return den_; }

    /// "0", "1" or "p/q".
    std::string to_string() const;
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend bool operator==(const FuzzyValue&, const FuzzyValue&) = default;
    friend std::strong_ordering operator<=>(const FuzzyValue& a, const FuzzyValue& b) noexcept
    {
        const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }

    friend std::ostream& operator<<(std::ostream& os, const FuzzyValue& v) { return os << v.to_string(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

inline const FuzzyValue& min(const FuzzyValue& a, const FuzzyValue& b) noexcept { return b < a ? b : a; }
inline const FuzzyValue& max(const FuzzyValue& a, const FuzzyValue& b) noexcept { return a < b ? b : a; }

} // namespace hbck

template <>
struct std::hash<hbck::FuzzyValue> {
    std::size_t operator()(const hbck::FuzzyValue& v) const noexcept
    {
        return std::hash<std::uint64_t>{}(v.numerator() * 0x9e3779b97f4a7c15ULL ^ v.denominator());
    }
};

#endif // HBCK_FUZZY_VALUE_HPP
