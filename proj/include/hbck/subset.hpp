#ifndef HBCK_SUBSET_HPP
#define HBCK_SUBSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace hbck {

using Element = std::size_t;

inline constexpr std::size_t kMaxCarrier = 64;

/// Subset of a carrier of at most kMaxCarrier elements, stored as a bitmask
/// over element indices.
class Subset {
public:
    class iterator {
    public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

        constexpr Element operator*() const noexcept { return static_cast<Element>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() noexcept
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr Subset() noexcept = default;
    constexpr explicit Subset(std::uint64_t bits) noexcept : bits_(bits) {}
    constexpr Subset(std::initializer_list<Element> elems) noexcept
    {
        for (auto e : elems) {
            insert(e);
        }
    }

    static constexpr Subset singleton(Element e) noexcept { return Subset(std::uint64_t{1} << e); }
    /// {0, ..., n-1}
    static constexpr Subset full(std::size_t n) noexcept
    {
        return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(Element e) const noexcept { return (bits_ >> e) & 1U; }
    constexpr void insert(Element e) noexcept { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(Element e) noexcept { bits_ &= ~(std::uint64_t{1} << e); }
    constexpr bool subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Subset other) const noexcept { return (bits_ & other.bits_) != 0; }
    /// Smallest element; undefined on the empty set.
    constexpr Element front() const noexcept { return static_cast<Element>(std::countr_zero(bits_)); }

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    constexpr Subset& operator|=(Subset o) noexcept
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr Subset& operator&=(Subset o) noexcept
    {
        bits_ &= o.bits_;
        return *this;
    }
    friend constexpr Subset operator|(Subset a, Subset b) noexcept { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) noexcept { return Subset(a.bits_ & b.bits_); }
    friend constexpr bool operator==(Subset, Subset) noexcept = default;
    friend constexpr auto operator<=>(Subset a, Subset b) noexcept { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

} // namespace hbck

#endif // HBCK_SUBSET_HPP
