#ifndef ORDTOP_PARALLEL_HPP
#define ORDTOP_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace ordtop {

/// Execution policy for enumeration sweeps. The serial path is the
/// reference implementation; every report must be byte-identical between
/// the two (all reductions are sums and index minima).
enum class Exec { serial, parallel };

template <typename F>
void for_each_index(Exec exec, std::size_t count, F&& body) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < count; ++i) body(i);
    }
}

/// Order-independent first-hit tracker: keeps the smallest index.
class MinIndex {
public:
    static constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

    void update(std::uint64_t idx) {
        std::uint64_t cur = value_.load(std::memory_order_relaxed);
        while (idx < cur && !value_.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
    }
    bool found() const { return value_.load(std::memory_order_relaxed) != none; }
    std::uint64_t get() const { return value_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> value_{none};
};

/// Order-independent counter.
class Counter {
public:
    void add(std::uint64_t k = 1) { value_.fetch_add(k, std::memory_order_relaxed); }
    std::uint64_t get() const { return value_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> value_{0};
};

} // namespace ordtop

#endif
