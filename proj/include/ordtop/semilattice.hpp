#ifndef ORDTOP_SEMILATTICE_HPP
#define ORDTOP_SEMILATTICE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordtop/topo_poset.hpp"

namespace ordtop {

/// A commutative idempotent semigroup on {0..n-1} given by its operation
/// table. The natural order x <= y iff xy = x makes the operation the
/// binary meet.
class Semilattice {
public:
    /// Validates idempotency, commutativity and associativity; errors name
    /// the violated axiom and a witnessing triple.
    static Semilattice from_table(int n, const std::vector<std::vector<int>>& table);

    /// Builds the meet table of a poset in which every pair has an inf.
    /// Returns nothing when some pair has no inf.
    static std::optional<Semilattice> from_meet_poset(const FinitePoset& p);

    int ground_size() const { return n_; }
    int op(int x, int y) const { return table_[static_cast<std::size_t>(x * 16 + y)]; }

    /// The poset with x <= y iff xy = x.
    FinitePoset natural_order() const;

    /// Fold of the operation over a nonempty set; equals its inf in the
    /// natural order. Throws EmptySet.
    int meet_of_subset(SubsetMask a) const;

    /// {ab : a in A, b in B} as a mask.
    SubsetMask op_image(SubsetMask a, SubsetMask b) const;

    bool is_subsemilattice(SubsetMask a) const;
    /// Closure of a under the operation.
    SubsetMask generated_subsemilattice(SubsetMask a) const;
    /// All operation-closed subsets, the empty set included, ascending.
    std::vector<SubsetMask> subsemilattices() const;

    std::vector<std::uint8_t> encode() const;

    friend bool operator==(const Semilattice& a, const Semilattice& b) {
        if (a.n_ != b.n_) return false;
        for (int x = 0; x < a.n_; ++x)
            for (int y = 0; y < a.n_; ++y)
                if (a.op(x, y) != b.op(x, y)) return false;
        return true;
    }

private:
    Semilattice() { table_.fill(0); }

    int n_ = 0;
    std::array<std::uint8_t, 256> table_;
};

struct ContinuityProfile {
    bool separately_continuous = false;
    /// Empty above the n <= 4 cap (the square would not fit 16 points).
    std::optional<bool> jointly_continuous;
};

/// A semilattice carrying a topology, with the natural order derived once
/// at construction.
class TopologizedSemilattice {
public:
    static constexpr int joint_continuity_cap = 4;

    TopologizedSemilattice(Semilattice sl, FiniteTopology topology);

    int ground_size() const { return sl_.ground_size(); }
    const Semilattice& semilattice() const { return sl_; }
    const FiniteTopology& topology() const { return topology_; }
    const FinitePoset& natural_order() const { return order_; }

    /// View through the natural order; shares nothing, cheap to build.
    TopologizedPoset as_topologized_poset() const { return TopologizedPoset(order_, topology_); }

    /// Separate continuity checks every translation x -> ax; joint
    /// continuity checks the operation against the square's product
    /// topology. Both literal, computed independently.
    ContinuityProfile continuity_profile() const;

    std::vector<SubsetMask> closed_subsemilattices() const;

    /// Topology generated by complements of closed subsemilattices.
    FiniteTopology weak_star_topology() const;
    /// Cover-compactness oracle run on the weak* topology.
    bool is_zar_compact() const;

    /// For every x and y outside the lower cone of x, some z outside that
    /// cone has y in the interior of its upper cone.
    bool is_v_semilattice() const;

    /// Minimal-neighborhood criterion: every min_nbhd(x) is a
    /// subsemilattice. The definition-literal base search lives in the
    /// oracles module and cross-checks this fast path.
    bool is_lawson() const;

    /// For every pair of distinct points, some closed neighborhood of the
    /// first is a subsemilattice excluding the second. Intersections of
    /// closed-neighborhood families are themselves closed neighborhoods,
    /// so the achievable intersections are enumerated smallest-first.
    bool is_gdelta_separated() const;

    std::vector<std::uint8_t> encode() const;

private:
    Semilattice sl_;
    FiniteTopology topology_;
    FinitePoset order_;
};

} // namespace ordtop

#endif
