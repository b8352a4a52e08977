#ifndef ORDTOP_TOPOLOGY_HPP
#define ORDTOP_TOPOLOGY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ordtop/errors.hpp"
#include "ordtop/subset_mask.hpp"

namespace ordtop {

struct SeparationProfile {
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
};

/// A topology on the ground set {0..n-1}, stored extensionally as the
/// ascending sorted list of open sets, together with the table of minimal
/// open neighborhoods (every finite topology is Alexandrov, so the table
/// exists and each entry is itself open).
class FiniteTopology {
public:
    /// Maximum family size accepted by the cover-compactness oracle.
    static constexpr std::size_t compactness_oracle_budget = 20;

    /// Validates the family (empty and full set present, closed under
    /// pairwise union and intersection) and derives the minimal-neighborhood
    /// table. Input order and duplicates are irrelevant. Throws NotATopology
    /// with a violating pair on a closure failure.
    static FiniteTopology from_opens(int n, const std::vector<SubsetMask>& family);

    /// Smallest topology containing the subbasis: closes subbasis + {X}
    /// under pairwise intersections, then takes all unions. The result is
    /// re-validated through from_opens.
    static FiniteTopology generate(int n, const std::vector<SubsetMask>& subbasis);

    static FiniteTopology discrete(int n);
    static FiniteTopology indiscrete(int n);

    /// Alexandrov topology of a preorder given by up-rows (rows[x] = set of
    /// y with x <= y). Opens are exactly the up-closed masks. Trusted
    /// constructor for enumeration and product paths; the correspondence
    /// with from_opens is covered by tests.
    static FiniteTopology from_preorder_rows(int n, const std::array<std::uint16_t, 16>& rows);

    int ground_size() const { return n_; }
    const std::vector<std::uint16_t>& open_bits() const { return opens_; }
    std::size_t open_count() const { return opens_.size(); }
    std::vector<SubsetMask> opens() const;
    SubsetMask min_nbhd(int x) const { return SubsetMask(min_nbhd_[static_cast<std::size_t>(x)], n_); }

    bool is_open(SubsetMask a) const;
    bool is_closed(SubsetMask a) const;

    /// Smallest closed superset of a: {x : min_nbhd(x) meets a}.
    SubsetMask closure(SubsetMask a) const;
    /// Union of all opens inside a.
    SubsetMask interior(SubsetMask a) const;

    /// x <= y iff x lies in the closure of {y}; rows[x] = {y : x <= y}.
    /// Evaluated literally through singleton closures.
    std::vector<SubsetMask> specialization_preorder() const;

    /// T0/T1/T2 evaluated literally: antisymmetry of the specialization
    /// preorder, closedness of singletons, and the open-U-with-closure
    /// separation of distinct points.
    SeparationProfile separation_profile() const;

    /// Every point outside f has an open neighborhood disjoint from f.
    bool is_t1_closed_set(SubsetMask f) const;
    /// Every point outside f has a neighborhood (any superset of an open
    /// set containing the point) whose closure is disjoint from f.
    bool is_t2_closed_set(SubsetMask f) const;

    /// Literal open-cover compactness of k: enumerates subfamilies of the
    /// open family and verifies that every subfamily covering k admits a
    /// finite subcover. Throws OracleBudgetExceeded when the open family
    /// has more than compactness_oracle_budget members.
    bool is_compact_subset(SubsetMask k) const;

    /// Byte encoding (n, |opens|, opens...) used for deterministic ordering.
    std::vector<std::uint8_t> encode() const;

    friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
        return a.n_ == b.n_ && a.opens_ == b.opens_;
    }

private:
    FiniteTopology() = default;

    int n_ = 0;
    std::vector<std::uint16_t> opens_;      // ascending, duplicate-free
    std::array<std::uint16_t, 16> min_nbhd_{}; // min_nbhd_[x] = smallest open containing x
};

/// Tychonoff product; point (x, y) is encoded row-major as x*n2 + y.
/// Throws CapacityExceeded when n1*n2 > 16.
FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2);

struct Subspace {
    FiniteTopology topology;
    std::vector<int> points; // new index -> original point, ascending
};

/// Trace topology on the nonempty carrier s, reindexed by the ascending
/// enumeration of s. Throws EmptyCarrier.
Subspace subspace_topology(const FiniteTopology& t, SubsetMask s);

} // namespace ordtop

#endif
