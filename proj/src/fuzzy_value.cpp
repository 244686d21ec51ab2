#include "hbck/fuzzy_value.hpp"

#include "hbck/error.hpp"

#include <charconv>
#include <numeric>

namespace hbck {

FuzzyValue::FuzzyValue(std::uint64_t numerator, std::uint64_t denominator)
{
    if (denominator == 0) {
        throw InputError(ErrorCode::BadRational, "zero denominator in membership degree");
    }
    if (numerator > denominator) {
        throw InputError(ErrorCode::MuOutOfRange,
                         "membership degree " + std::to_string(numerator) + "/" +
                             std::to_string(denominator) + " exceeds 1");
    }
    const auto g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
    if (num_ == 0) {
        den_ = 1;
    }
}

namespace {

std::uint64_t parse_u64(std::string_view digits, std::string_view whole)
{
    if (digits.empty()) {
        throw InputError(ErrorCode::BadRational, "malformed rational '" + std::string(whole) + "'");
    }
    std::uint64_t value = 0;
    const auto* end = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InputError(ErrorCode::BadRational, "malformed rational '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

FuzzyValue FuzzyValue::parse(std::string_view text)
{
    if (!text.empty() && text.front() == '-') {
        throw InputError(ErrorCode::MuOutOfRange, "negative membership degree '" + std::string(text) + "'");
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return FuzzyValue(parse_u64(text, text), 1);
    }
    return FuzzyValue(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
}

std::string FuzzyValue::to_string() const
{
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

} // namespace hbck
