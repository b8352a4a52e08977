#include "ordtop/poset.hpp"

#include <string>

namespace ordtop {

namespace {

void check_fits(int n, SubsetMask m, const char* what) {
    if (m.ground_size() != n)
        throw InputError(std::string(what) + ": mask does not fit ground set of size " +
                         std::to_string(n));
}

} // namespace

void FinitePoset::fill_down() {
    for (int x = 0; x < n_; ++x) {
        std::uint16_t d = 0;
        for (int y = 0; y < n_; ++y)
            if ((up_[static_cast<std::size_t>(y)] >> x) & 1u) d |= static_cast<std::uint16_t>(1u << y);
        down_[static_cast<std::size_t>(x)] = d;
    }
}

FinitePoset FinitePoset::from_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0 || n > SubsetMask::max_ground)
        throw CapacityExceeded("ground set size must be between 0 and 16");

    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(1u << x);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw InputError("relation pair (" + std::to_string(i) + "," + std::to_string(j) +
                             ") out of range");
        rows[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
    }
    // Transitive closure on row masks.
    for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            std::uint16_t row = rows[static_cast<std::size_t>(x)];
            for (std::uint16_t rest = row; rest; rest &= static_cast<std::uint16_t>(rest - 1))
                row |= rows[static_cast<std::size_t>(std::countr_zero(rest))];
            if (row != rows[static_cast<std::size_t>(x)]) {
                rows[static_cast<std::size_t>(x)] = row;
                grew = true;
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (((rows[static_cast<std::size_t>(x)] >> y) & 1u) &&
                ((rows[static_cast<std::size_t>(y)] >> x) & 1u))
                throw NotAntisymmetric("relation is not antisymmetric: " + std::to_string(x) +
                                           " <= " + std::to_string(y) + " <= " + std::to_string(x),
                                       x, y);
    return trusted(n, rows);
}

FinitePoset FinitePoset::from_up_rows(int n, const std::array<std::uint16_t, 16>& rows) {
    if (n < 0 || n > SubsetMask::max_ground)
        throw CapacityExceeded("ground set size must be between 0 and 16");
    const std::uint16_t full = SubsetMask::full_set(n).bits();
    for (int x = 0; x < n; ++x) {
        const std::uint16_t row = rows[static_cast<std::size_t>(x)];
        if (row & ~full) throw InputError("up-set row exceeds the ground set");
        if (!((row >> x) & 1u))
            throw InputError("relation is not reflexive at " + std::to_string(x));
        for (std::uint16_t rest = row; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
            const int y = std::countr_zero(rest);
            if (rows[static_cast<std::size_t>(y)] & ~row)
                throw InputError("relation is not transitive at (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (((rows[static_cast<std::size_t>(x)] >> y) & 1u) &&
                ((rows[static_cast<std::size_t>(y)] >> x) & 1u))
                throw NotAntisymmetric("relation is not antisymmetric between " + std::to_string(x) +
                                           " and " + std::to_string(y),
                                       x, y);
    return trusted(n, rows);
}

FinitePoset FinitePoset::trusted(int n, const std::array<std::uint16_t, 16>& rows) {
    FinitePoset p;
    p.n_ = n;
    p.up_ = rows;
    p.fill_down();
    return p;
}

FinitePoset FinitePoset::chain(int n) {
    std::array<std::uint16_t, 16> rows{};
    const std::uint16_t full = SubsetMask::full_set(n).bits();
    for (int x = 0; x < n; ++x)
        rows[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(full & ~((1u << x) - 1u));
    return trusted(n, rows);
}

FinitePoset FinitePoset::antichain(int n) {
    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = static_cast<std::uint16_t>(1u << x);
    return trusted(n, rows);
}

bool FinitePoset::is_chain(SubsetMask a) const {
    check_fits(n_, a, "is_chain");
    bool ok = true;
    a.for_each([&](int x) {
        a.for_each([&](int y) {
            if (!leq(x, y) && !leq(y, x)) ok = false;
        });
    });
    return ok;
}

bool FinitePoset::is_up_directed(SubsetMask a) const {
    check_fits(n_, a, "is_up_directed");
    if (a.empty()) throw EmptySet("directedness is undefined for the empty set");
    bool ok = true;
    a.for_each([&](int x) {
        a.for_each([&](int y) {
            const std::uint16_t common = static_cast<std::uint16_t>(
                up_[static_cast<std::size_t>(x)] & up_[static_cast<std::size_t>(y)] & a.bits());
            if (!common) ok = false;
        });
    });
    return ok;
}

bool FinitePoset::is_down_directed(SubsetMask a) const {
    check_fits(n_, a, "is_down_directed");
    if (a.empty()) throw EmptySet("directedness is undefined for the empty set");
    bool ok = true;
    a.for_each([&](int x) {
        a.for_each([&](int y) {
            const std::uint16_t common = static_cast<std::uint16_t>(
                down_[static_cast<std::size_t>(x)] & down_[static_cast<std::size_t>(y)] & a.bits());
            if (!common) ok = false;
        });
    });
    return ok;
}

SubsetMask FinitePoset::upper_bounds(SubsetMask a) const {
    check_fits(n_, a, "upper_bounds");
    std::uint16_t bounds = SubsetMask::full_set(n_).bits();
    a.for_each([&](int x) { bounds &= up_[static_cast<std::size_t>(x)]; });
    return SubsetMask(bounds, n_);
}

SubsetMask FinitePoset::lower_bounds(SubsetMask a) const {
    check_fits(n_, a, "lower_bounds");
    std::uint16_t bounds = SubsetMask::full_set(n_).bits();
    a.for_each([&](int x) { bounds &= down_[static_cast<std::size_t>(x)]; });
    return SubsetMask(bounds, n_);
}

std::optional<int> FinitePoset::sup(SubsetMask a) const {
    check_fits(n_, a, "sup");
    if (a.empty()) throw EmptySet("sup is undefined for the empty set");
    const SubsetMask bounds = upper_bounds(a);
    std::optional<int> least;
    bounds.for_each([&](int b) {
        if (bounds.subset_of(up_set(b))) least = b; // b below every bound
    });
    return least;
}

std::optional<int> FinitePoset::inf(SubsetMask a) const {
    check_fits(n_, a, "inf");
    if (a.empty()) throw EmptySet("inf is undefined for the empty set");
    const SubsetMask bounds = lower_bounds(a);
    std::optional<int> greatest;
    bounds.for_each([&](int b) {
        if (bounds.subset_of(down_set(b))) greatest = b;
    });
    return greatest;
}

SubsetMask FinitePoset::directed_hull(SubsetMask a,
                                      const std::function<int(int, int)>& choice) const {
    check_fits(n_, a, "directed_hull");
    if (a.empty()) throw EmptySet("directed_hull is undefined for the empty set");
    std::uint16_t cur = a.bits();
    for (;;) {
        std::uint16_t next = cur;
        SubsetMask(cur, n_).for_each([&](int x) {
            SubsetMask(cur, n_).for_each([&](int y) {
                const int z = choice(x, y);
                if (z < 0 || z >= n_ || !leq(x, z) || !leq(y, z))
                    throw ChoiceOutOfBounds("choice(" + std::to_string(x) + "," +
                                                std::to_string(y) + ") = " + std::to_string(z) +
                                                " is not an upper bound",
                                            x, y, z);
                next |= static_cast<std::uint16_t>(1u << z);
            });
        });
        if (next == cur) return SubsetMask(cur, n_);
        cur = next;
    }
}

std::vector<SubsetMask> FinitePoset::chains() const {
    std::vector<SubsetMask> out;
    const std::uint32_t limit = 1u << n_;
    for (std::uint32_t m = 1; m < limit; ++m) {
        const SubsetMask a(static_cast<std::uint16_t>(m), n_);
        if (is_chain(a)) out.push_back(a);
    }
    return out;
}

FinitePoset FinitePoset::dual() const {
    FinitePoset p;
    p.n_ = n_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
}

std::vector<std::uint8_t> FinitePoset::encode() const {
    std::vector<std::uint8_t> out;
    out.reserve(1 + 2 * static_cast<std::size_t>(n_));
    out.push_back(static_cast<std::uint8_t>(n_));
    for (int x = 0; x < n_; ++x) {
        out.push_back(static_cast<std::uint8_t>(up_[static_cast<std::size_t>(x)] & 0xFF));
        out.push_back(static_cast<std::uint8_t>(up_[static_cast<std::size_t>(x)] >> 8));
    }
    return out;
}

FinitePoset product_order(const FinitePoset& p1, const FinitePoset& p2) {
    const int n1 = p1.ground_size(), n2 = p2.ground_size();
    if (n1 * n2 > SubsetMask::max_ground)
        throw CapacityExceeded("product ground set has " + std::to_string(n1 * n2) +
                               " points, limit is 16");
    std::array<std::uint16_t, 16> rows{};
    for (int x = 0; x < n1; ++x) {
        for (int y = 0; y < n2; ++y) {
            std::uint16_t row = 0;
            p1.up_set(x).for_each([&](int xp) {
                p2.up_set(y).for_each(
                    [&](int yp) { row |= static_cast<std::uint16_t>(1u << (xp * n2 + yp)); });
            });
            rows[static_cast<std::size_t>(x * n2 + y)] = row;
        }
    }
    return FinitePoset::trusted(n1 * n2, rows);
}

} // namespace ordtop
