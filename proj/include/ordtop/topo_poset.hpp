#ifndef ORDTOP_TOPO_POSET_HPP
#define ORDTOP_TOPO_POSET_HPP

#include <optional>

#include "ordtop/poset.hpp"
#include "ordtop/topology.hpp"

namespace ordtop {

struct ClosednessProfile {
    bool up_closed = false;
    bool down_closed = false;
    bool updown_closed = false;
    bool chain_closed = false;
    bool weakly_up_closed = false;
    /// Closedness of the order in the square; empty above the n <= 4 cap.
    std::optional<bool> pospace;

    bool up_down_closed() const { return up_closed && down_closed; }
};

/// A poset carrying a topology on the same ground set.
class TopologizedPoset {
public:
    /// Largest n for which the square fits 16 points, so the order graph
    /// can be tested for closedness in the product topology.
    static constexpr int pospace_cap = 4;

    TopologizedPoset(FinitePoset poset, FiniteTopology topology);

    int ground_size() const { return poset_.ground_size(); }
    const FinitePoset& poset() const { return poset_; }
    const FiniteTopology& topology() const { return topology_; }

    /// Every nonempty up-directed set has a sup lying in its closure.
    /// Evaluated literally over all nonempty subsets; on finite carriers
    /// this is a theorem, which the audits confirm rather than assume.
    bool is_up_complete() const;
    bool is_down_complete() const;
    bool is_complete() const;

    /// Chain-only characterization of completeness: every nonempty chain
    /// has sup and inf in its closure. Agreement with is_complete is an
    /// exported audit.
    bool chain_complete_equivalent() const;

    /// D must be nonempty and up-directed (throws EmptySet / NotDirected).
    /// True when every open U containing x traps a tail D & up(d) inside U.
    bool up_converges(SubsetMask d, int x) const;
    bool down_converges(SubsetMask d, int x) const;

    ClosednessProfile closedness_profile() const;

    /// Every closed chain passes the literal cover-compactness oracle.
    bool is_chain_compact() const;

    std::vector<std::uint8_t> encode() const;

private:
    FinitePoset poset_;
    FiniteTopology topology_;
};

} // namespace ordtop

#endif
