#include "ordtop/topo_poset.hpp"

#include <string>

namespace ordtop {

TopologizedPoset::TopologizedPoset(FinitePoset poset, FiniteTopology topology)
    : poset_(std::move(poset)), topology_(std::move(topology)) {
    if (poset_.ground_size() != topology_.ground_size())
        throw InputError("poset and topology have different ground sets (" +
                         std::to_string(poset_.ground_size()) + " vs " +
                         std::to_string(topology_.ground_size()) + ")");
}

bool TopologizedPoset::is_up_complete() const {
    const int n = ground_size();
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t m = 1; m < limit; ++m) {
        const SubsetMask d(static_cast<std::uint16_t>(m), n);
        if (!poset_.is_up_directed(d)) continue;
        const std::optional<int> s = poset_.sup(d);
        if (!s || !topology_.closure(d).contains(*s)) return false;
    }
    return true;
}

bool TopologizedPoset::is_down_complete() const {
    const int n = ground_size();
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t m = 1; m < limit; ++m) {
        const SubsetMask d(static_cast<std::uint16_t>(m), n);
        if (!poset_.is_down_directed(d)) continue;
        const std::optional<int> s = poset_.inf(d);
        if (!s || !topology_.closure(d).contains(*s)) return false;
    }
    return true;
}

bool TopologizedPoset::is_complete() const { return is_up_complete() && is_down_complete(); }

bool TopologizedPoset::chain_complete_equivalent() const {
    for (SubsetMask c : poset_.chains()) {
        const SubsetMask cl = topology_.closure(c);
        const std::optional<int> s = poset_.sup(c);
        const std::optional<int> i = poset_.inf(c);
        if (!s || !cl.contains(*s)) return false;
        if (!i || !cl.contains(*i)) return false;
    }
    return true;
}

bool TopologizedPoset::up_converges(SubsetMask d, int x) const {
    if (d.empty()) throw EmptySet("up_converges needs a nonempty set");
    if (!poset_.is_up_directed(d)) throw NotDirected("up_converges needs an up-directed set");
    for (std::uint16_t u : topology_.open_bits()) {
        if (!((u >> x) & 1u)) continue;
        bool tail_inside = false;
        d.for_each([&](int e) {
            if ((d.bits() & poset_.up_set(e).bits() & ~u) == 0) tail_inside = true;
        });
        if (!tail_inside) return false;
    }
    return true;
}

bool TopologizedPoset::down_converges(SubsetMask d, int x) const {
    if (d.empty()) throw EmptySet("down_converges needs a nonempty set");
    if (!poset_.is_down_directed(d)) throw NotDirected("down_converges needs a down-directed set");
    for (std::uint16_t u : topology_.open_bits()) {
        if (!((u >> x) & 1u)) continue;
        bool tail_inside = false;
        d.for_each([&](int e) {
            if ((d.bits() & poset_.down_set(e).bits() & ~u) == 0) tail_inside = true;
        });
        if (!tail_inside) return false;
    }
    return true;
}

ClosednessProfile TopologizedPoset::closedness_profile() const {
    const int n = ground_size();
    ClosednessProfile p;

    p.up_closed = p.down_closed = p.updown_closed = p.weakly_up_closed = true;
    for (int x = 0; x < n; ++x) {
        if (!topology_.is_closed(poset_.up_set(x))) p.up_closed = false;
        if (!topology_.is_closed(poset_.down_set(x))) p.down_closed = false;
        if (!topology_.is_closed(poset_.updown_set(x))) p.updown_closed = false;
        if (!topology_.closure(SubsetMask::singleton(x, n)).subset_of(poset_.up_set(x)))
            p.weakly_up_closed = false;
    }

    p.chain_closed = true;
    for (SubsetMask c : poset_.chains())
        if (!poset_.is_chain(topology_.closure(c))) {
            p.chain_closed = false;
            break;
        }

    if (n <= pospace_cap) {
        if (n == 0) {
            p.pospace = true;
        } else {
            const FiniteTopology square = product_topology(topology_, topology_);
            std::uint16_t graph = 0;
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (poset_.leq(x, y)) graph |= static_cast<std::uint16_t>(1u << (x * n + y));
            p.pospace = square.is_closed(SubsetMask(graph, n * n));
        }
    }
    return p;
}

bool TopologizedPoset::is_chain_compact() const {
    for (SubsetMask c : poset_.chains())
        if (topology_.is_closed(c) && !topology_.is_compact_subset(c)) return false;
    return true;
}

std::vector<std::uint8_t> TopologizedPoset::encode() const {
    std::vector<std::uint8_t> out = poset_.encode();
    const std::vector<std::uint8_t> t = topology_.encode();
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

} // namespace ordtop
