#pragma once

#include <cstdint>
#include <future>
#include <thread>
#include <utility>

namespace aao::detail {

// Leaf size of the fixed reduction tree. The tree shape depends only on the
// index range, never on the thread count, so parallel and serial runs produce
// bit-identical floating-point sums.
inline constexpr std::uint64_t pairwise_leaf = 1024;

template <class T, class Term>
T pairwise_sum_serial(std::uint64_t begin, std::uint64_t count, const Term& term) {
    if (count <= pairwise_leaf) {
        T acc{};
        for (std::uint64_t i = 0; i < count; ++i) acc += term(begin + i);
        return acc;
    }
    const std::uint64_t half = count / 2;
    T left = pairwise_sum_serial<T>(begin, half, term);
    T right = pairwise_sum_serial<T>(begin + half, count - half, term);
    left += right;
    return left;
}

template <class T, class Term>
T pairwise_sum_parallel(std::uint64_t begin, std::uint64_t count, const Term& term,
                        unsigned depth) {
    if (depth == 0 || count <= (std::uint64_t{1} << 16)) {
        return pairwise_sum_serial<T>(begin, count, term);
    }
    const std::uint64_t half = count / 2;
    auto right = std::async(std::launch::async, [&] {
        return pairwise_sum_parallel<T>(begin + half, count - half, term, depth - 1);
    });
    T left = pairwise_sum_parallel<T>(begin, half, term, depth - 1);
    left += right.get();
    return left;
}

/// Deterministic pairwise-tree sum of term(0..count-1).
/// max_threads == 0 picks a small automatic level of parallelism;
/// max_threads == 1 forces the serial walk. Results are identical either way.
template <class T, class Term>
T pairwise_sum(std::uint64_t count, const Term& term, unsigned max_threads = 0) {
    unsigned threads = max_threads;
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        if (threads > 4) threads = 4;
    }
    unsigned depth = 0;
    while ((2u << depth) <= threads) ++depth;
    if (depth == 0) return pairwise_sum_serial<T>(0, count, term);
    return pairwise_sum_parallel<T>(0, count, term, depth);
}

} // namespace aao::detail
