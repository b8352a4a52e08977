#ifndef ORDTOP_SUBSET_MASK_HPP
#define ORDTOP_SUBSET_MASK_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ordtop {

/// A subset of the ground set {0..n-1}, n <= 16, stored as a bit pattern.
/// The ground size travels with the mask so that complements and fullness
/// tests are well defined; all operations require matching ground sizes.
class SubsetMask {
public:
    static constexpr int max_ground = 16;

    constexpr SubsetMask() = default;

    constexpr SubsetMask(std::uint16_t bits, int n) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
        assert(n >= 0 && n <= max_ground);
        assert((bits & ~low_bits(n)) == 0);
    }

    static constexpr SubsetMask empty_set(int n) { return SubsetMask(0, n); }
    static constexpr SubsetMask full_set(int n) { return SubsetMask(low_bits(n), n); }
    static constexpr SubsetMask singleton(int x, int n) {
        assert(x >= 0 && x < n);
        return SubsetMask(static_cast<std::uint16_t>(1u << x), n);
    }

    constexpr std::uint16_t bits() const { return bits_; }
    constexpr int ground_size() const { return n_; }

    constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool full() const { return bits_ == low_bits(n_); }
    constexpr int count() const { return std::popcount(bits_); }

    constexpr bool subset_of(SubsetMask o) const {
        assert(n_ == o.n_);
        return (bits_ & ~o.bits_) == 0;
    }
    constexpr bool intersects(SubsetMask o) const {
        assert(n_ == o.n_);
        return (bits_ & o.bits_) != 0;
    }

    constexpr SubsetMask operator|(SubsetMask o) const {
        assert(n_ == o.n_);
        return SubsetMask(static_cast<std::uint16_t>(bits_ | o.bits_), n_);
    }
    constexpr SubsetMask operator&(SubsetMask o) const {
        assert(n_ == o.n_);
        return SubsetMask(static_cast<std::uint16_t>(bits_ & o.bits_), n_);
    }
    /// Set difference.
    constexpr SubsetMask minus(SubsetMask o) const {
        assert(n_ == o.n_);
        return SubsetMask(static_cast<std::uint16_t>(bits_ & ~o.bits_), n_);
    }
    /// Complement relative to the ground set.
    constexpr SubsetMask complement() const {
        return SubsetMask(static_cast<std::uint16_t>(~bits_ & low_bits(n_)), n_);
    }

    constexpr SubsetMask with(int x) const {
        assert(x >= 0 && x < n_);
        return SubsetMask(static_cast<std::uint16_t>(bits_ | (1u << x)), n_);
    }
    constexpr SubsetMask without(int x) const {
        assert(x >= 0 && x < n_);
        return SubsetMask(static_cast<std::uint16_t>(bits_ & ~(1u << x)), n_);
    }

    friend constexpr bool operator==(SubsetMask a, SubsetMask b) {
        return a.bits_ == b.bits_ && a.n_ == b.n_;
    }
    /// Numeric order on bit patterns; ground sizes are expected to match.
    friend constexpr bool operator<(SubsetMask a, SubsetMask b) { return a.bits_ < b.bits_; }

    /// Smallest element, or -1 when empty.
    constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint16_t m = bits_; m; m &= static_cast<std::uint16_t>(m - 1))
            f(std::countr_zero(m));
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int x) { out.push_back(x); });
        return out;
    }

private:
    static constexpr std::uint16_t low_bits(int n) {
        return static_cast<std::uint16_t>((n >= 16) ? 0xFFFFu : ((1u << n) - 1u));
    }

    std::uint16_t bits_ = 0;
    std::uint8_t n_ = 0;
};

} // namespace ordtop

#endif
