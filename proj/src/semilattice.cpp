#include "ordtop/semilattice.hpp"

#include <algorithm>
#include <string>

namespace ordtop {

Semilattice Semilattice::from_table(int n, const std::vector<std::vector<int>>& table) {
    if (n < 0 || n > SubsetMask::max_ground)
        throw CapacityExceeded("ground set size must be between 0 and 16");
    if (static_cast<int>(table.size()) != n)
        throw InputError("operation table must have " + std::to_string(n) + " rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("operation table rows must have " + std::to_string(n) + " entries");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("operation table entry out of range");
    }

    Semilattice s;
    s.n_ = n;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            s.table_[static_cast<std::size_t>(x * 16 + y)] =
                static_cast<std::uint8_t>(table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);

    for (int x = 0; x < n; ++x)
        if (s.op(x, x) != x)
            throw NotIdempotent("operation is not idempotent at " + std::to_string(x), x);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (s.op(x, y) != s.op(y, x))
                throw NotCommutative("operation is not commutative at (" + std::to_string(x) + "," +
                                         std::to_string(y) + ")",
                                     x, y);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (s.op(s.op(x, y), z) != s.op(x, s.op(y, z)))
                    throw NotAssociative("operation is not associative at (" + std::to_string(x) +
                                             "," + std::to_string(y) + "," + std::to_string(z) + ")",
                                         x, y, z);
    return s;
}

std::optional<Semilattice> Semilattice::from_meet_poset(const FinitePoset& p) {
    const int n = p.ground_size();
    Semilattice s;
    s.n_ = n;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const std::optional<int> m =
                (n == 0) ? std::nullopt
                         : p.inf(SubsetMask::singleton(x, n) | SubsetMask::singleton(y, n));
            if (!m) return std::nullopt;
            s.table_[static_cast<std::size_t>(x * 16 + y)] = static_cast<std::uint8_t>(*m);
        }
    }
    return s;
}

FinitePoset Semilattice::natural_order() const {
    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < n_; ++x) {
        std::uint16_t row = 0;
        for (int y = 0; y < n_; ++y)
            if (op(x, y) == x) row |= static_cast<std::uint16_t>(1u << y);
        rows[static_cast<std::size_t>(x)] = row;
    }
    // Valid for any semilattice table; validated anyway since it is cheap.
    return FinitePoset::from_up_rows(n_, rows);
}

int Semilattice::meet_of_subset(SubsetMask a) const {
    if (a.empty()) throw EmptySet("meet of the empty set is undefined");
    int acc = -1;
    a.for_each([&](int x) { acc = (acc < 0) ? x : op(acc, x); });
    return acc;
}

SubsetMask Semilattice::op_image(SubsetMask a, SubsetMask b) const {
    std::uint16_t out = 0;
    a.for_each([&](int x) {
        b.for_each([&](int y) { out |= static_cast<std::uint16_t>(1u << op(x, y)); });
    });
    return SubsetMask(out, n_);
}

bool Semilattice::is_subsemilattice(SubsetMask a) const {
    bool ok = true;
    a.for_each([&](int x) {
        a.for_each([&](int y) {
            if (!a.contains(op(x, y))) ok = false;
        });
    });
    return ok;
}

SubsetMask Semilattice::generated_subsemilattice(SubsetMask a) const {
    std::uint16_t cur = a.bits();
    for (;;) {
        std::uint16_t next = cur;
        SubsetMask(cur, n_).for_each([&](int x) {
            SubsetMask(cur, n_).for_each(
                [&](int y) { next |= static_cast<std::uint16_t>(1u << op(x, y)); });
        });
        if (next == cur) return SubsetMask(cur, n_);
        cur = next;
    }
}

std::vector<SubsetMask> Semilattice::subsemilattices() const {
    std::vector<SubsetMask> out;
    const std::uint32_t limit = 1u << n_;
    for (std::uint32_t m = 0; m < limit; ++m) {
        const SubsetMask a(static_cast<std::uint16_t>(m), n_);
        if (is_subsemilattice(a)) out.push_back(a);
    }
    return out;
}

std::vector<std::uint8_t> Semilattice::encode() const {
    std::vector<std::uint8_t> out;
    out.reserve(1 + static_cast<std::size_t>(n_ * n_));
    out.push_back(static_cast<std::uint8_t>(n_));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) out.push_back(static_cast<std::uint8_t>(op(x, y)));
    return out;
}

TopologizedSemilattice::TopologizedSemilattice(Semilattice sl, FiniteTopology topology)
    : sl_(std::move(sl)), topology_(std::move(topology)), order_(sl_.natural_order()) {
    if (sl_.ground_size() != topology_.ground_size())
        throw InputError("semilattice and topology have different ground sets (" +
                         std::to_string(sl_.ground_size()) + " vs " +
                         std::to_string(topology_.ground_size()) + ")");
}

ContinuityProfile TopologizedSemilattice::continuity_profile() const {
    const int n = ground_size();
    ContinuityProfile p;

    p.separately_continuous = true;
    for (int a = 0; a < n && p.separately_continuous; ++a) {
        for (std::uint16_t u : topology_.open_bits()) {
            std::uint16_t pre = 0;
            for (int x = 0; x < n; ++x)
                if ((u >> sl_.op(a, x)) & 1u) pre |= static_cast<std::uint16_t>(1u << x);
            if (!topology_.is_open(SubsetMask(pre, n))) {
                p.separately_continuous = false;
                break;
            }
        }
    }

    if (n <= joint_continuity_cap) {
        if (n == 0) {
            p.jointly_continuous = true;
        } else {
            const FiniteTopology square = product_topology(topology_, topology_);
            bool joint = true;
            for (std::uint16_t u : topology_.open_bits()) {
                std::uint16_t pre = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = 0; y < n; ++y)
                        if ((u >> sl_.op(x, y)) & 1u)
                            pre |= static_cast<std::uint16_t>(1u << (x * n + y));
                if (!square.is_open(SubsetMask(pre, n * n))) {
                    joint = false;
                    break;
                }
            }
            p.jointly_continuous = joint;
        }
    }
    return p;
}

std::vector<SubsetMask> TopologizedSemilattice::closed_subsemilattices() const {
    std::vector<SubsetMask> out;
    for (SubsetMask a : sl_.subsemilattices())
        if (topology_.is_closed(a)) out.push_back(a);
    return out;
}

FiniteTopology TopologizedSemilattice::weak_star_topology() const {
    std::vector<SubsetMask> subbasis;
    for (SubsetMask z : closed_subsemilattices()) subbasis.push_back(z.complement());
    return FiniteTopology::generate(ground_size(), subbasis);
}

bool TopologizedSemilattice::is_zar_compact() const {
    const FiniteTopology zar = weak_star_topology();
    return zar.is_compact_subset(SubsetMask::full_set(ground_size()));
}

bool TopologizedSemilattice::is_v_semilattice() const {
    const int n = ground_size();
    for (int x = 0; x < n; ++x) {
        const SubsetMask down = order_.down_set(x);
        for (int y = 0; y < n; ++y) {
            if (down.contains(y)) continue;
            bool found = false;
            for (int z = 0; z < n && !found; ++z) {
                if (down.contains(z)) continue;
                if (topology_.interior(order_.up_set(z)).contains(y)) found = true;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool TopologizedSemilattice::is_lawson() const {
    for (int x = 0; x < ground_size(); ++x)
        if (!sl_.is_subsemilattice(topology_.min_nbhd(x))) return false;
    return true;
}

bool TopologizedSemilattice::is_gdelta_separated() const {
    const int n = ground_size();
    for (int x = 0; x < n; ++x) {
        // Closed neighborhoods of x: closed supersets of min_nbhd(x),
        // smallest first. Finite intersections of closed neighborhoods are
        // again closed neighborhoods, so these are all the achievable
        // family intersections.
        const SubsetMask base = topology_.min_nbhd(x);
        std::vector<SubsetMask> closed_nbhds;
        const std::uint32_t limit = 1u << n;
        for (std::uint32_t m = 0; m < limit; ++m) {
            const SubsetMask cand(static_cast<std::uint16_t>(m), n);
            if (base.subset_of(cand) && topology_.is_closed(cand)) closed_nbhds.push_back(cand);
        }
        std::sort(closed_nbhds.begin(), closed_nbhds.end(), [](SubsetMask a, SubsetMask b) {
            return a.count() != b.count() ? a.count() < b.count() : a.bits() < b.bits();
        });

        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            bool separated = false;
            for (SubsetMask nb : closed_nbhds) {
                if (!nb.contains(y) && sl_.is_subsemilattice(nb)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) return false;
        }
    }
    return true;
}

std::vector<std::uint8_t> TopologizedSemilattice::encode() const {
    std::vector<std::uint8_t> out = sl_.encode();
    const std::vector<std::uint8_t> t = topology_.encode();
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

} // namespace ordtop
