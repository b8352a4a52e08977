#include "ordtop/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ordtop {

namespace {

std::string mask_to_string(std::uint16_t bits, int n) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < n; ++x) {
        if ((bits >> x) & 1u) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
    }
    s += "}";
    return s;
}

void check_fits(int n, SubsetMask m, const char* what) {
    if (m.ground_size() != n || (m.bits() & ~SubsetMask::full_set(n).bits()) != 0)
        throw InputError(std::string(what) + ": mask does not fit ground set of size " +
                         std::to_string(n));
}

} // namespace

FiniteTopology FiniteTopology::from_opens(int n, const std::vector<SubsetMask>& family) {
    if (n < 0 || n > SubsetMask::max_ground)
        throw CapacityExceeded("ground set size must be between 0 and 16");
    for (SubsetMask m : family) check_fits(n, m, "from_opens");

    std::vector<std::uint16_t> opens;
    opens.reserve(family.size());
    for (SubsetMask m : family) opens.push_back(m.bits());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    const std::uint16_t full = SubsetMask::full_set(n).bits();
    if (!std::binary_search(opens.begin(), opens.end(), std::uint16_t{0}))
        throw NotATopology("not a topology: empty set missing");
    if (!std::binary_search(opens.begin(), opens.end(), full))
        throw NotATopology("not a topology: full set missing");

    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            const std::uint16_t u = static_cast<std::uint16_t>(opens[i] | opens[j]);
            const std::uint16_t v = static_cast<std::uint16_t>(opens[i] & opens[j]);
            if (!std::binary_search(opens.begin(), opens.end(), u))
                throw NotATopology("not a topology: union of " + mask_to_string(opens[i], n) +
                                       " and " + mask_to_string(opens[j], n) + " is missing",
                                   SubsetMask(opens[i], n), SubsetMask(opens[j], n));
            if (!std::binary_search(opens.begin(), opens.end(), v))
                throw NotATopology("not a topology: intersection of " +
                                       mask_to_string(opens[i], n) + " and " +
                                       mask_to_string(opens[j], n) + " is missing",
                                   SubsetMask(opens[i], n), SubsetMask(opens[j], n));
        }
    }

    FiniteTopology t;
    t.n_ = n;
    t.opens_ = std::move(opens);
    for (int x = 0; x < n; ++x) {
        std::uint16_t nb = full;
        for (std::uint16_t u : t.opens_)
            if ((u >> x) & 1u) nb &= u;
        t.min_nbhd_[static_cast<std::size_t>(x)] = nb;
        // A pairwise-intersection-closed finite family contains the full
        // intersection, so the minimal neighborhood must be present.
        if (!std::binary_search(t.opens_.begin(), t.opens_.end(), nb))
            throw NotATopology("not a topology: minimal neighborhood of " + std::to_string(x) +
                               " is not open");
    }
    return t;
}

FiniteTopology FiniteTopology::generate(int n, const std::vector<SubsetMask>& subbasis) {
    if (n < 0 || n > SubsetMask::max_ground)
        throw CapacityExceeded("ground set size must be between 0 and 16");
    for (SubsetMask m : subbasis) check_fits(n, m, "generate");

    const std::uint16_t full = SubsetMask::full_set(n).bits();

    // Close subbasis + {X} under pairwise intersections.
    std::set<std::uint16_t> basis;
    basis.insert(full);
    for (SubsetMask m : subbasis) basis.insert(m.bits());
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::uint16_t> cur(basis.begin(), basis.end());
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                grew |= basis.insert(static_cast<std::uint16_t>(cur[i] & cur[j])).second;
    }

    // All unions of basis members.
    std::set<std::uint16_t> opens;
    opens.insert(0);
    for (std::uint16_t b : basis) opens.insert(b);
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<std::uint16_t> cur(opens.begin(), opens.end());
        for (std::uint16_t u : cur)
            for (std::uint16_t b : basis)
                grew |= opens.insert(static_cast<std::uint16_t>(u | b)).second;
    }

    std::vector<SubsetMask> family;
    family.reserve(opens.size());
    for (std::uint16_t u : opens) family.emplace_back(u, n);
    return from_opens(n, family);
}

FiniteTopology FiniteTopology::discrete(int n) {
    std::vector<SubsetMask> family;
    const std::uint32_t limit = 1u << n;
    family.reserve(limit);
    for (std::uint32_t m = 0; m < limit; ++m)
        family.emplace_back(static_cast<std::uint16_t>(m), n);
    return from_opens(n, family);
}

FiniteTopology FiniteTopology::indiscrete(int n) {
    return from_opens(n, {SubsetMask::empty_set(n), SubsetMask::full_set(n)});
}

FiniteTopology FiniteTopology::from_preorder_rows(int n, const std::array<std::uint16_t, 16>& rows) {
    FiniteTopology t;
    t.n_ = n;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t m = 0; m < limit; ++m) {
        bool up_closed = true;
        for (std::uint16_t rest = static_cast<std::uint16_t>(m); rest;
             rest &= static_cast<std::uint16_t>(rest - 1)) {
            const int x = std::countr_zero(rest);
            if (rows[static_cast<std::size_t>(x)] & ~m) {
                up_closed = false;
                break;
            }
        }
        if (up_closed) t.opens_.push_back(static_cast<std::uint16_t>(m));
    }
    // The up-row of x is the smallest up-set containing x.
    for (int x = 0; x < n; ++x) t.min_nbhd_[static_cast<std::size_t>(x)] = rows[static_cast<std::size_t>(x)];
    return t;
}

std::vector<SubsetMask> FiniteTopology::opens() const {
    std::vector<SubsetMask> out;
    out.reserve(opens_.size());
    for (std::uint16_t u : opens_) out.emplace_back(u, n_);
    return out;
}

bool FiniteTopology::is_open(SubsetMask a) const {
    check_fits(n_, a, "is_open");
    return std::binary_search(opens_.begin(), opens_.end(), a.bits());
}

bool FiniteTopology::is_closed(SubsetMask a) const {
    check_fits(n_, a, "is_closed");
    return std::binary_search(opens_.begin(), opens_.end(), a.complement().bits());
}

SubsetMask FiniteTopology::closure(SubsetMask a) const {
    check_fits(n_, a, "closure");
    std::uint16_t out = 0;
    for (int x = 0; x < n_; ++x)
        if (min_nbhd_[static_cast<std::size_t>(x)] & a.bits()) out |= static_cast<std::uint16_t>(1u << x);
    return SubsetMask(out, n_);
}

SubsetMask FiniteTopology::interior(SubsetMask a) const {
    check_fits(n_, a, "interior");
    std::uint16_t out = 0;
    for (std::uint16_t u : opens_)
        if ((u & ~a.bits()) == 0) out |= u;
    return SubsetMask(out, n_);
}

std::vector<SubsetMask> FiniteTopology::specialization_preorder() const {
    std::vector<SubsetMask> rows(static_cast<std::size_t>(n_), SubsetMask::empty_set(n_));
    for (int y = 0; y < n_; ++y) {
        const SubsetMask cl = closure(SubsetMask::singleton(y, n_));
        cl.for_each([&](int x) { rows[static_cast<std::size_t>(x)] = rows[static_cast<std::size_t>(x)].with(y); });
    }
    return rows;
}

SeparationProfile FiniteTopology::separation_profile() const {
    SeparationProfile p;

    const std::vector<SubsetMask> rows = specialization_preorder();
    p.t0 = true;
    for (int x = 0; x < n_ && p.t0; ++x)
        for (int y = 0; y < n_; ++y)
            if (x != y && rows[static_cast<std::size_t>(x)].contains(y) &&
                rows[static_cast<std::size_t>(y)].contains(x)) {
                p.t0 = false;
                break;
            }

    p.t1 = true;
    for (int x = 0; x < n_ && p.t1; ++x)
        if (!is_closed(SubsetMask::singleton(x, n_))) p.t1 = false;

    p.t2 = true;
    for (int x = 0; x < n_ && p.t2; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (x == y) continue;
            bool separated = false;
            for (std::uint16_t u : opens_) {
                if (!((u >> x) & 1u)) continue;
                const SubsetMask cl = closure(SubsetMask(u, n_));
                if (!cl.contains(y)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                p.t2 = false;
                break;
            }
        }
    }
    return p;
}

bool FiniteTopology::is_t1_closed_set(SubsetMask f) const {
    check_fits(n_, f, "is_t1_closed_set");
    for (int x = 0; x < n_; ++x) {
        if (f.contains(x)) continue;
        bool found = false;
        for (std::uint16_t u : opens_) {
            if (((u >> x) & 1u) && (u & f.bits()) == 0) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool FiniteTopology::is_t2_closed_set(SubsetMask f) const {
    check_fits(n_, f, "is_t2_closed_set");
    for (int x = 0; x < n_; ++x) {
        if (f.contains(x)) continue;
        // Neighborhoods of x are exactly the supersets of min_nbhd(x).
        const std::uint16_t base = min_nbhd_[static_cast<std::size_t>(x)];
        const std::uint16_t free = static_cast<std::uint16_t>(SubsetMask::full_set(n_).bits() & ~base);
        bool found = false;
        for (std::uint16_t extra = free;; extra = static_cast<std::uint16_t>((extra - 1) & free)) {
            const SubsetMask nbhd(static_cast<std::uint16_t>(base | extra), n_);
            if (!closure(nbhd).intersects(f)) {
                found = true;
                break;
            }
            if (extra == 0) break;
        }
        if (!found) return false;
    }
    return true;
}

bool FiniteTopology::is_compact_subset(SubsetMask k) const {
    check_fits(n_, k, "is_compact_subset");
    if (opens_.size() > compactness_oracle_budget)
        throw OracleBudgetExceeded("cover-compactness oracle budget exceeded: " +
                                   std::to_string(opens_.size()) + " opens > " +
                                   std::to_string(compactness_oracle_budget));

    const std::uint16_t target = k.bits();
    const std::size_t m = opens_.size();

    // Suffix unions let the walk drop subtrees that cannot produce a cover.
    std::vector<std::uint16_t> suffix(m + 1, 0);
    for (std::size_t i = m; i-- > 0;)
        suffix[i] = static_cast<std::uint16_t>(suffix[i + 1] | opens_[i]);

    // Verifies one finite subcover of the current family: pick, for each
    // point of k, the first chosen open containing it.
    const auto subcover_verified = [&](const std::vector<std::uint16_t>& chosen) {
        std::uint16_t covered = 0;
        for (std::uint16_t rest = target; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
            const int x = std::countr_zero(rest);
            for (std::uint16_t u : chosen) {
                if ((u >> x) & 1u) {
                    covered |= u;
                    break;
                }
            }
        }
        return (target & ~covered) == 0;
    };

    // Include/exclude walk over the open family. Once a branch's family
    // covers k, one verified subcover certifies every superfamily in the
    // subtree (a subcover of F is a subcover of every F' >= F). Branches
    // whose remaining opens cannot complete a cover contain no covers.
    std::vector<std::uint16_t> chosen;
    bool all_covers_ok = true;
    const auto walk = [&](const auto& self, std::size_t idx, std::uint16_t unioned) -> void {
        if (!all_covers_ok) return;
        if ((target & ~unioned) == 0) {
            if (!subcover_verified(chosen)) all_covers_ok = false;
            return;
        }
        if (idx == m) return; // not a cover
        if (target & ~(unioned | suffix[idx])) return; // no cover below here
        chosen.push_back(opens_[idx]);
        self(self, idx + 1, static_cast<std::uint16_t>(unioned | opens_[idx]));
        chosen.pop_back();
        self(self, idx + 1, unioned);
    };
    walk(walk, 0, 0);
    return all_covers_ok;
}

std::vector<std::uint8_t> FiniteTopology::encode() const {
    std::vector<std::uint8_t> out;
    out.reserve(3 + 2 * opens_.size());
    out.push_back(static_cast<std::uint8_t>(n_));
    out.push_back(static_cast<std::uint8_t>(opens_.size() & 0xFF));
    out.push_back(static_cast<std::uint8_t>(opens_.size() >> 8));
    for (std::uint16_t u : opens_) {
        out.push_back(static_cast<std::uint8_t>(u & 0xFF));
        out.push_back(static_cast<std::uint8_t>(u >> 8));
    }
    return out;
}

FiniteTopology product_topology(const FiniteTopology& t1, const FiniteTopology& t2) {
    const int n1 = t1.ground_size(), n2 = t2.ground_size();
    if (n1 * n2 > SubsetMask::max_ground)
        throw CapacityExceeded("product ground set has " + std::to_string(n1 * n2) +
                               " points, limit is 16");
    const int n = n1 * n2;

    const std::vector<SubsetMask> r1 = t1.specialization_preorder();
    const std::vector<SubsetMask> r2 = t2.specialization_preorder();

    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < n1; ++x) {
        for (int y = 0; y < n2; ++y) {
            std::uint16_t row = 0;
            r1[static_cast<std::size_t>(x)].for_each([&](int xp) {
                r2[static_cast<std::size_t>(y)].for_each(
                    [&](int yp) { row |= static_cast<std::uint16_t>(1u << (xp * n2 + yp)); });
            });
            rows[static_cast<std::size_t>(x * n2 + y)] = row;
        }
    }
    return FiniteTopology::from_preorder_rows(n, rows);
}

Subspace subspace_topology(const FiniteTopology& t, SubsetMask s) {
    check_fits(t.ground_size(), s, "subspace_topology");
    if (s.empty()) throw EmptyCarrier("subspace carrier is empty");

    const std::vector<int> points = s.elements();
    const int m = static_cast<int>(points.size());
    std::array<int, 16> reindex{};
    for (int i = 0; i < m; ++i) reindex[static_cast<std::size_t>(points[static_cast<std::size_t>(i)])] = i;

    std::vector<SubsetMask> traces;
    for (std::uint16_t u : t.open_bits()) {
        std::uint16_t trace = 0;
        SubsetMask(static_cast<std::uint16_t>(u & s.bits()), t.ground_size()).for_each([&](int x) {
            trace |= static_cast<std::uint16_t>(1u << reindex[static_cast<std::size_t>(x)]);
        });
        traces.emplace_back(trace, m);
    }
    return Subspace{FiniteTopology::from_opens(m, traces), points};
}

} // namespace ordtop
