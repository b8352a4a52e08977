#ifndef ORDTOP_POSET_HPP
#define ORDTOP_POSET_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ordtop/errors.hpp"
#include "ordtop/subset_mask.hpp"

namespace ordtop {

/// A partial order on {0..n-1} stored as per-element upper cones:
/// up(x) = {y : x <= y}. Reflexivity, antisymmetry and transitivity are
/// established at construction.
class FinitePoset {
public:
    /// Takes the reflexive-transitive closure of the input pairs, then
    /// validates antisymmetry. Throws NotAntisymmetric with a witnessing
    /// pair of mutually related distinct elements.
    static FinitePoset from_relation(int n, const std::vector<std::pair<int, int>>& pairs);

    /// Validates the rows as a partial order.
    static FinitePoset from_up_rows(int n, const std::array<std::uint16_t, 16>& rows);

    /// Trusted constructor for enumeration paths that establish the axioms
    /// by construction.
    static FinitePoset trusted(int n, const std::array<std::uint16_t, 16>& rows);

    static FinitePoset chain(int n);
    static FinitePoset antichain(int n);

    int ground_size() const { return n_; }
    bool leq(int x, int y) const { return (up_[static_cast<std::size_t>(x)] >> y) & 1u; }

    SubsetMask up_set(int x) const { return SubsetMask(up_[static_cast<std::size_t>(x)], n_); }
    SubsetMask down_set(int x) const { return SubsetMask(down_[static_cast<std::size_t>(x)], n_); }
    SubsetMask updown_set(int x) const {
        return SubsetMask(static_cast<std::uint16_t>(up_[static_cast<std::size_t>(x)] |
                                                     down_[static_cast<std::size_t>(x)]),
                          n_);
    }

    /// Pairwise comparability; true on the empty set.
    bool is_chain(SubsetMask a) const;
    /// Every pair in a has an upper bound inside a. Throws EmptySet on the
    /// empty set: directedness is only defined for nonempty sets here.
    bool is_up_directed(SubsetMask a) const;
    bool is_down_directed(SubsetMask a) const;

    /// Least upper bound of the nonempty set a, when one exists.
    std::optional<int> sup(SubsetMask a) const;
    std::optional<int> inf(SubsetMask a) const;

    SubsetMask upper_bounds(SubsetMask a) const;
    SubsetMask lower_bounds(SubsetMask a) const;

    /// Least fixed point of A' = A | choice(A x A) for a choice function
    /// returning an upper bound of each pair. Throws ChoiceOutOfBounds when
    /// the returned element is not an upper bound, EmptySet on empty input.
    SubsetMask directed_hull(SubsetMask a, const std::function<int(int, int)>& choice) const;

    /// All nonempty chains, ascending mask order.
    std::vector<SubsetMask> chains() const;

    FinitePoset dual() const;

    /// Byte encoding (n, rows...) used for deterministic ordering.
    std::vector<std::uint8_t> encode() const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        if (a.n_ != b.n_) return false;
        for (int x = 0; x < a.n_; ++x)
            if (a.up_[static_cast<std::size_t>(x)] != b.up_[static_cast<std::size_t>(x)]) return false;
        return true;
    }

private:
    FinitePoset() = default;
    void fill_down();

    int n_ = 0;
    std::array<std::uint16_t, 16> up_{};
    std::array<std::uint16_t, 16> down_{};
};

/// Pointwise order on the row-major product carrier; (x,y) <= (x',y') iff
/// x <= x' and y <= y'. Throws CapacityExceeded when n1*n2 > 16.
FinitePoset product_order(const FinitePoset& p1, const FinitePoset& p2);

} // namespace ordtop

#endif
