#ifndef TVLAB_COMB_HPP
#define TVLAB_COMB_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tvlab/errors.hpp"

namespace tvlab {

// Visits every k-subset of {0, ..., n-1} in lexicographic order.  The visitor
// receives the subset as a sorted vector and returns true to continue or
// false to stop early.
template <class F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<int>&>(c))) return;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

// Partitions of {0, ..., n-1} into exactly r nonempty unlabeled parts,
// enumerated through restricted-growth strings in lexicographic order.  Each
// partition arrives with its parts sorted by minimum element and the members
// of every part ascending, which is the canonical form used throughout.
template <class F>
void for_each_set_partition(int n, int r, F&& visit) {
    if (n <= 0 || r <= 0 || r > n) return;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    // Depth-first enumeration of restricted-growth strings with exactly r blocks.
    std::vector<int> maxseen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> parts;
    int pos = 1;
    maxseen[1] = 0; // after rgs[0] = 0
    if (n == 1) {
        if (r == 1) {
            parts.assign(1, std::vector<int>{0});
            visit(static_cast<const std::vector<std::vector<int>>&>(parts));
        }
        return;
    }
    std::vector<int> choice(static_cast<std::size_t>(n), -1);
    while (pos >= 1) {
        if (pos == n) {
            if (maxseen[static_cast<std::size_t>(n)] + 1 == r) {
                parts.assign(static_cast<std::size_t>(r), {});
                for (int i = 0; i < n; ++i) {
                    parts[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
                }
                if (!visit(static_cast<const std::vector<std::vector<int>>&>(parts))) return;
            }
            --pos;
            continue;
        }
        const int limit = std::min(maxseen[static_cast<std::size_t>(pos)] + 1, r - 1);
        int next = choice[static_cast<std::size_t>(pos)] + 1;
        // Prune branches that can no longer reach r blocks.
        while (next <= limit) {
            const int blocks_after = std::max(maxseen[static_cast<std::size_t>(pos)], next) + 1;
            if (blocks_after + (n - pos - 1) >= r) break;
            ++next;
        }
        if (next > limit) {
            choice[static_cast<std::size_t>(pos)] = -1;
            --pos;
            continue;
        }
        choice[static_cast<std::size_t>(pos)] = next;
        rgs[static_cast<std::size_t>(pos)] = next;
        maxseen[static_cast<std::size_t>(pos) + 1] = std::max(maxseen[static_cast<std::size_t>(pos)], next);
        ++pos;
    }
}

inline std::vector<std::vector<std::vector<int>>> set_partitions(int n, int r) {
    std::vector<std::vector<std::vector<int>>> all;
    for_each_set_partition(n, r, [&](const std::vector<std::vector<int>>& parts) {
        all.push_back(parts);
        return true;
    });
    return all;
}

// Stirling number of the second kind, S(n, r).  Used to refuse enumerations
// that would not terminate in reasonable time.
inline std::uint64_t stirling2(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (n == 0) return 1;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, r); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                static_cast<std::uint64_t>(j) * row[static_cast<std::size_t>(j)] +
                row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(r)];
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// (r-1)!^d as a plain integer; the counts this library checks are all small.
inline std::uint64_t expected_tverberg_count(int d, int r) {
    std::uint64_t base = factorial(r - 1), out = 1;
    for (int i = 0; i < d; ++i) out *= base;
    return out;
}

} // namespace tvlab

#endif
