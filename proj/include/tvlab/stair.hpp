#ifndef TVLAB_STAIR_HPP
#define TVLAB_STAIR_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/types.hpp"

// Stair-convexity.  Everything in this header is ordinal: only coordinate
// comparisons are ever made, never arithmetic on coordinates.  Replacing the
// coordinates by any order-isomorphic values leaves every answer unchanged,
// which is what lets grid computations run on small exponent vectors instead
// of towers of powers.

namespace tvlab {

// The stair-path from a to b: move the last coordinate of the lower endpoint
// up to the other endpoint's value, then recurse on the remaining
// coordinates.  At most d+1 vertices; consecutive vertices differ in exactly
// one coordinate.
struct StairPath {
    std::vector<ExactPoint> vertices;
};

namespace stair_detail {

inline std::vector<ExactPoint> path_between(const ExactPoint& x, const ExactPoint& y, int k) {
    if (k == 0) return {x};
    const int axis = k - 1;
    if (x[axis] == y[axis]) return path_between(x, y, k - 1);
    if (x[axis] < y[axis]) {
        ExactPoint lifted = x;
        lifted[axis] = y[axis];
        auto tail = path_between(lifted, y, k - 1);
        tail.insert(tail.begin(), x);
        return tail;
    }
    auto reversed = path_between(y, x, k);
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

} // namespace stair_detail

inline StairPath stair_path(const ExactPoint& a, const ExactPoint& b) {
    if (a.dim() != b.dim() || a.dim() == 0) {
        throw DimensionError("stair_path requires two points of equal positive dimension");
    }
    return StairPath{stair_detail::path_between(a, b, a.dim())};
}

// Membership of a point on a stair path, segment by segment.
inline bool on_stair_path(const ExactPoint& x, const StairPath& path) {
    if (path.vertices.empty()) return false;
    if (x == path.vertices.front()) return true;
    for (std::size_t s = 0; s + 1 < path.vertices.size(); ++s) {
        const ExactPoint& u = path.vertices[s];
        const ExactPoint& v = path.vertices[s + 1];
        int moving = -1;
        for (int i = 0; i < u.dim(); ++i) {
            if (u[i] != v[i]) {
                moving = i;
                break;
            }
        }
        bool ok = true;
        for (int i = 0; i < u.dim() && ok; ++i) {
            if (i == moving) {
                const Rational& lo = u[i] < v[i] ? u[i] : v[i];
                const Rational& hi = u[i] < v[i] ? v[i] : u[i];
                ok = lo <= x[i] && x[i] <= hi;
            } else {
                ok = x[i] == u[i];
            }
        }
        if (ok) return true;
    }
    return false;
}

// The type of b with respect to a: 0 when b is coordinatewise below a, and
// j >= 1 when b_j >= a_j while b_i <= a_i for every later axis i > j.  A point
// can have several types; equal points have all of them.
inline std::set<int> point_type(const ExactPoint& b, const ExactPoint& a) {
    if (a.dim() != b.dim()) throw DimensionError("point_type requires equal dimensions");
    const int d = a.dim();
    std::set<int> types;
    bool below = true;
    for (int i = 0; i < d; ++i) {
        if (b[i] > a[i]) {
            below = false;
            break;
        }
    }
    if (below) types.insert(0);
    bool tail_ok = true; // b_i <= a_i for all axes beyond j
    for (int j = d; j >= 1; --j) {
        if (b[j - 1] >= a[j - 1] && tail_ok) types.insert(j);
        if (b[j - 1] > a[j - 1]) tail_ok = false;
    }
    return types;
}

// Stair-Caratheodory membership: x lies in the stair hull of S iff S contains
// a point of every type 0, 1, ..., d with respect to x.
inline bool in_stair_hull(const ExactPoint& x, const std::vector<ExactPoint>& s) {
    const int d = x.dim();
    for (const ExactPoint& p : s) {
        if (p.dim() != d) throw DimensionError("in_stair_hull: mixed dimensions");
    }
    for (int j = 0; j <= d; ++j) {
        bool found = false;
        for (const ExactPoint& p : s) {
            const auto types = point_type(p, x);
            if (types.count(j)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Stair-general position: no two points share a coordinate on any axis.
inline bool is_stair_general(const std::vector<ExactPoint>& s) {
    if (s.empty()) return true;
    const int d = s.front().dim();
    for (const ExactPoint& p : s) {
        if (p.dim() != d) throw DimensionError("is_stair_general: mixed dimensions");
    }
    for (int axis = 0; axis < d; ++axis) {
        std::vector<const Rational*> vals;
        vals.reserve(s.size());
        for (const ExactPoint& p : s) vals.push_back(&p[axis]);
        std::sort(vals.begin(), vals.end(), [](const Rational* a, const Rational* b) { return *a < *b; });
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
            if (*vals[i] == *vals[i + 1]) return false;
        }
    }
    return true;
}

// A dimension plus a point list in stair-general position.
struct StairConfig {
    int dim = 0;
    std::vector<ExactPoint> points;
};

inline bool in_stair_hull(const ExactPoint& x, const StairConfig& s) { return in_stair_hull(x, s.points); }
inline bool is_stair_general(const StairConfig& s) { return is_stair_general(s.points); }

namespace stair_detail {

using IVec = std::vector<int>;

// Order-isomorphic copy of a point set: every coordinate replaced by its rank
// along its axis.  Requires stair-general position so ranks are strict.
struct RankSpace {
    int dim = 0;
    std::vector<IVec> pts;
    std::vector<std::vector<Rational>> axis_values; // rank -> original value
};

inline RankSpace rank_compress(const std::vector<ExactPoint>& points, int dim) {
    RankSpace rs;
    rs.dim = dim;
    const int n = static_cast<int>(points.size());
    rs.pts.assign(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(dim), 0));
    rs.axis_values.assign(static_cast<std::size_t>(dim), {});
    for (int axis = 0; axis < dim; ++axis) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return points[static_cast<std::size_t>(a)][axis] < points[static_cast<std::size_t>(b)][axis];
        });
        auto& values = rs.axis_values[static_cast<std::size_t>(axis)];
        values.reserve(static_cast<std::size_t>(n));
        for (int rank = 0; rank < n; ++rank) {
            const int who = order[static_cast<std::size_t>(rank)];
            rs.pts[static_cast<std::size_t>(who)][static_cast<std::size_t>(axis)] = rank;
            values.push_back(points[static_cast<std::size_t>(who)][axis]);
        }
    }
    return rs;
}

inline bool in_hull_ranks(const IVec& x, const std::vector<const IVec*>& part, int d) {
    // type 0: some s <= x on every axis
    for (int j = 0; j <= d; ++j) {
        bool found = false;
        for (const IVec* sp : part) {
            const IVec& s = *sp;
            bool ok;
            if (j == 0) {
                ok = true;
                for (int i = 0; i < d; ++i) {
                    if (s[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i)]) {
                        ok = false;
                        break;
                    }
                }
            } else {
                ok = s[static_cast<std::size_t>(j) - 1] >= x[static_cast<std::size_t>(j) - 1];
                for (int i = j; i < d && ok; ++i) {
                    if (s[static_cast<std::size_t>(i)] > x[static_cast<std::size_t>(i)]) ok = false;
                }
            }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Exhaustive oracle in rank space: every candidate whose i-th coordinate is
// one of the input i-th coordinates, tested for membership in every part.
// Returns the unique winner, or nothing; two winners contradict uniqueness.
inline std::optional<IVec> hull_intersection_ranks(const RankSpace& rs,
                                                   const std::vector<std::vector<int>>& part_indices) {
    const int d = rs.dim;
    const int n = static_cast<int>(rs.pts.size());
    std::vector<std::vector<const IVec*>> parts;
    parts.reserve(part_indices.size());
    for (const auto& idx : part_indices) {
        std::vector<const IVec*> part;
        part.reserve(idx.size());
        for (int i : idx) part.push_back(&rs.pts[static_cast<std::size_t>(i)]);
        parts.push_back(std::move(part));
    }
    std::optional<IVec> winner;
    IVec candidate(static_cast<std::size_t>(d), 0);
    while (true) {
        bool member = true;
        for (const auto& part : parts) {
            if (!in_hull_ranks(candidate, part, d)) {
                member = false;
                break;
            }
        }
        if (member) {
            if (winner) {
                throw InvariantViolation("stair hull intersection contains more than one grid candidate");
            }
            winner = candidate;
        }
        int axis = d - 1;
        while (axis >= 0 && candidate[static_cast<std::size_t>(axis)] == n - 1) {
            candidate[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
        ++candidate[static_cast<std::size_t>(axis)];
    }
    return winner;
}

inline ExactPoint ranks_to_point(const RankSpace& rs, const IVec& ranks) {
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(rs.dim));
    for (int axis = 0; axis < rs.dim; ++axis) {
        coords.push_back(rs.axis_values[static_cast<std::size_t>(axis)][static_cast<std::size_t>(
            ranks[static_cast<std::size_t>(axis)])]);
    }
    return ExactPoint(std::move(coords));
}

} // namespace stair_detail

// The single point common to the stair hulls of the parts, when it exists.
// Precondition: the union is stair-general and has exactly T(d, r) points,
// in which case the intersection is either empty or one point, and that point
// shares each coordinate with some input point, so the per-axis coordinate
// grid is an exhaustive candidate set.
inline std::optional<ExactPoint> stair_hull_intersection_point(const std::vector<std::vector<ExactPoint>>& parts) {
    const int r = static_cast<int>(parts.size());
    if (r < 2) throw PreconditionError("stair_hull_intersection_point requires at least two parts");
    std::vector<ExactPoint> all;
    std::vector<std::vector<int>> part_indices;
    for (const auto& part : parts) {
        if (part.empty()) throw PreconditionError("stair_hull_intersection_point: empty part");
        std::vector<int> idx;
        idx.reserve(part.size());
        for (const ExactPoint& p : part) {
            idx.push_back(static_cast<int>(all.size()));
            all.push_back(p);
        }
        part_indices.push_back(std::move(idx));
    }
    const int d = all.front().dim();
    if (static_cast<int>(all.size()) != t_param(d, r)) {
        throw PreconditionError("stair_hull_intersection_point requires exactly T(d,r) points in total");
    }
    if (!is_stair_general(all)) {
        throw PreconditionError("stair_hull_intersection_point requires stair-general position");
    }
    auto rs = stair_detail::rank_compress(all, d);
    auto ranks = stair_detail::hull_intersection_ranks(rs, part_indices);
    if (!ranks) return std::nullopt;
    return stair_detail::ranks_to_point(rs, *ranks);
}

// All stair-Tverberg partitions of a stair-general T(d,r)-point configuration
// together with their common point (the same for every partition).
struct StairTverbergResult {
    std::vector<std::vector<std::vector<int>>> partitions; // canonical, 1-based labels
    ExactPoint common_point;
};

enum class StairAlgorithm { brute_force, recursive };

namespace stair_detail {

inline std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> parts) {
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return parts;
}

struct RecOut {
    std::vector<std::vector<std::vector<int>>> partitions; // 0-based point indices
    IVec point_ranks;
};

// The peel-and-recurse enumeration: list points by decreasing last
// coordinate; the r-1 highest go to pairwise different parts, every one of
// which avoids the part of the r-th highest point; the rest, projected one
// dimension down, is partitioned recursively.  The common point is the
// projection's common point lifted by the r-th highest last coordinate.
inline RecOut recursive_partitions(std::vector<int> labels, const std::vector<IVec>& pts, int dim_eff, int r) {
    RecOut out;
    if (dim_eff == 0) {
        if (static_cast<int>(labels.size()) != r) {
            throw InvariantViolation("stair recursion: base case size mismatch");
        }
        std::sort(labels.begin(), labels.end());
        std::vector<std::vector<int>> parts;
        parts.reserve(labels.size());
        for (int label : labels) parts.push_back({label});
        out.partitions.push_back(std::move(parts));
        return out;
    }
    if (static_cast<int>(labels.size()) != t_param(dim_eff, r)) {
        throw InvariantViolation("stair recursion: level size mismatch");
    }
    const int axis = dim_eff - 1;
    std::sort(labels.begin(), labels.end(), [&](int a, int b) {
        return pts[static_cast<std::size_t>(a)][static_cast<std::size_t>(axis)] >
               pts[static_cast<std::size_t>(b)][static_cast<std::size_t>(axis)];
    });
    std::vector<int> top(labels.begin(), labels.begin() + (r - 1));
    const int rth_highest = labels[static_cast<std::size_t>(r) - 1];
    std::vector<int> rest(labels.begin() + (r - 1), labels.end());

    RecOut sub = recursive_partitions(std::move(rest), pts, dim_eff - 1, r);
    out.point_ranks = std::move(sub.point_ranks);
    out.point_ranks.push_back(pts[static_cast<std::size_t>(rth_highest)][static_cast<std::size_t>(axis)]);

    std::sort(top.begin(), top.end());
    for (const auto& partition : sub.partitions) {
        int host = -1;
        for (int p = 0; p < r; ++p) {
            const auto& part = partition[static_cast<std::size_t>(p)];
            if (std::find(part.begin(), part.end(), rth_highest) != part.end()) {
                host = p;
                break;
            }
        }
        if (host < 0) throw InvariantViolation("stair recursion: lost the r-th highest point");
        std::vector<int> others;
        for (int p = 0; p < r; ++p) {
            if (p != host) others.push_back(p);
        }
        std::vector<int> perm = top;
        do {
            auto enlarged = partition;
            for (std::size_t k = 0; k < perm.size(); ++k) {
                enlarged[static_cast<std::size_t>(others[k])].push_back(perm[k]);
            }
            out.partitions.push_back(canonical_partition(std::move(enlarged)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

} // namespace stair_detail

inline StairTverbergResult enumerate_stair_tverberg(const StairConfig& config, int r, StairAlgorithm algorithm) {
    const int d = config.dim;
    const int n = static_cast<int>(config.points.size());
    if (r < 2) throw PreconditionError("enumerate_stair_tverberg requires r >= 2");
    if (d < 1) throw PreconditionError("enumerate_stair_tverberg requires d >= 1");
    if (n != t_param(d, r)) {
        throw PreconditionError("enumerate_stair_tverberg requires exactly T(d,r) points");
    }
    if (!is_stair_general(config.points)) {
        throw PreconditionError("enumerate_stair_tverberg requires stair-general position");
    }
    auto rs = stair_detail::rank_compress(config.points, d);

    StairTverbergResult result;
    std::optional<stair_detail::IVec> common;

    if (algorithm == StairAlgorithm::brute_force) {
        for_each_set_partition(n, r, [&](const std::vector<std::vector<int>>& parts) {
            auto point = stair_detail::hull_intersection_ranks(rs, parts);
            if (point) {
                if (common && *common != *point) {
                    throw InvariantViolation("stair-Tverberg partitions disagree on the common point");
                }
                common = point;
                std::vector<std::vector<int>> labeled;
                labeled.reserve(parts.size());
                for (const auto& part : parts) {
                    std::vector<int> q;
                    q.reserve(part.size());
                    for (int i : part) q.push_back(i + 1);
                    labeled.push_back(std::move(q));
                }
                result.partitions.push_back(std::move(labeled));
            }
            return true;
        });
    } else {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
        auto rec = stair_detail::recursive_partitions(std::move(labels), rs.pts, d, r);
        common = std::move(rec.point_ranks);
        for (auto& partition : rec.partitions) {
            std::vector<std::vector<int>> labeled;
            labeled.reserve(partition.size());
            for (auto& part : partition) {
                std::vector<int> q;
                q.reserve(part.size());
                for (int i : part) q.push_back(i + 1);
                labeled.push_back(std::move(q));
            }
            result.partitions.push_back(std::move(labeled));
        }
    }

    if (!common || result.partitions.empty()) {
        throw InvariantViolation("stair-general configuration admits no stair-Tverberg partition");
    }
    std::sort(result.partitions.begin(), result.partitions.end());
    result.partitions.erase(std::unique(result.partitions.begin(), result.partitions.end()),
                            result.partitions.end());
    result.common_point = stair_detail::ranks_to_point(rs, *common);
    return result;
}

// Runs both enumeration algorithms and insists they produce the same
// partition set and the same common point.
inline StairTverbergResult enumerate_stair_tverberg_checked(const StairConfig& config, int r) {
    auto brute = enumerate_stair_tverberg(config, r, StairAlgorithm::brute_force);
    auto rec = enumerate_stair_tverberg(config, r, StairAlgorithm::recursive);
    if (brute.partitions != rec.partitions) {
        throw InvariantViolation("brute-force and recursive stair-Tverberg enumerations disagree");
    }
    if (!(brute.common_point == rec.common_point)) {
        throw InvariantViolation("brute-force and recursive enumerations disagree on the common point");
    }
    return brute;
}

// Shrinks parts whose stair hulls all contain x down to subsets of total size
// exactly T(d, r) whose stair hulls still intersect.  Construction: in one
// dimension keep the point closing the intersection interval from the right
// plus both extremes of every other part; in higher dimension slice at the
// witness height, recurse on the projections, and re-attach one high point to
// every part that does not own the highest selected point.
inline std::vector<std::vector<ExactPoint>> stair_kirchberger_reduce(const std::vector<std::vector<ExactPoint>>& parts,
                                                                     const ExactPoint& x) {
    const int r = static_cast<int>(parts.size());
    const int d = x.dim();
    if (r < 2) throw PreconditionError("stair_kirchberger_reduce requires at least two parts");
    std::vector<ExactPoint> all;
    std::vector<std::vector<int>> part_indices;
    for (const auto& part : parts) {
        if (part.empty()) throw PreconditionError("stair_kirchberger_reduce: empty part");
        std::vector<int> idx;
        for (const ExactPoint& p : part) {
            if (p.dim() != d) throw DimensionError("stair_kirchberger_reduce: mixed dimensions");
            idx.push_back(static_cast<int>(all.size()));
            all.push_back(p);
        }
        part_indices.push_back(std::move(idx));
    }
    if (!is_stair_general(all)) {
        throw PreconditionError("stair_kirchberger_reduce requires stair-general position");
    }
    for (const auto& part : parts) {
        if (!in_stair_hull(x, part)) {
            throw PreconditionError("stair_kirchberger_reduce: witness not in every stair hull");
        }
    }

    // Recursive reduction on prefixes of the coordinates.
    std::function<std::vector<std::vector<int>>(const std::vector<std::vector<int>>&, int)> reduce_rec =
        [&](const std::vector<std::vector<int>>& idx_parts, int dim_eff) -> std::vector<std::vector<int>> {
        int total = 0;
        for (const auto& part : idx_parts) total += static_cast<int>(part.size());
        const int target = t_param(dim_eff, r);
        if (total < target) {
            throw InvariantViolation("stair_kirchberger_reduce: parts below target size");
        }
        if (total == target) return idx_parts;

        if (dim_eff == 1) {
            // Right end of the intersection interval: the smallest part-maximum.
            int y_part = -1, y_idx = -1;
            for (int p = 0; p < r; ++p) {
                int maxi = idx_parts[static_cast<std::size_t>(p)].front();
                for (int i : idx_parts[static_cast<std::size_t>(p)]) {
                    if (all[static_cast<std::size_t>(i)][0] > all[static_cast<std::size_t>(maxi)][0]) maxi = i;
                }
                if (y_idx < 0 || all[static_cast<std::size_t>(maxi)][0] < all[static_cast<std::size_t>(y_idx)][0]) {
                    y_idx = maxi;
                    y_part = p;
                }
            }
            std::vector<std::vector<int>> out(static_cast<std::size_t>(r));
            for (int p = 0; p < r; ++p) {
                if (p == y_part) {
                    out[static_cast<std::size_t>(p)] = {y_idx};
                    continue;
                }
                int mini = idx_parts[static_cast<std::size_t>(p)].front();
                int maxi = mini;
                for (int i : idx_parts[static_cast<std::size_t>(p)]) {
                    if (all[static_cast<std::size_t>(i)][0] < all[static_cast<std::size_t>(mini)][0]) mini = i;
                    if (all[static_cast<std::size_t>(i)][0] > all[static_cast<std::size_t>(maxi)][0]) maxi = i;
                }
                if (mini == maxi) {
                    throw InvariantViolation("stair_kirchberger_reduce: single-point companion part");
                }
                out[static_cast<std::size_t>(p)] = {mini, maxi};
            }
            return out;
        }

        const int axis = dim_eff - 1;
        // Slice below the witness: keep the points at or below x on this axis.
        std::vector<std::vector<int>> lows(static_cast<std::size_t>(r));
        for (int p = 0; p < r; ++p) {
            for (int i : idx_parts[static_cast<std::size_t>(p)]) {
                if (all[static_cast<std::size_t>(i)][axis] <= x[axis]) {
                    lows[static_cast<std::size_t>(p)].push_back(i);
                }
            }
            if (lows[static_cast<std::size_t>(p)].empty()) {
                throw InvariantViolation("stair_kirchberger_reduce: slice removed a whole part");
            }
        }
        auto sub = reduce_rec(lows, dim_eff - 1);

        // The highest selected point; its part keeps only the selection.
        int q_idx = -1, q_part = -1;
        for (int p = 0; p < r; ++p) {
            for (int i : sub[static_cast<std::size_t>(p)]) {
                if (q_idx < 0 || all[static_cast<std::size_t>(i)][axis] > all[static_cast<std::size_t>(q_idx)][axis]) {
                    q_idx = i;
                    q_part = p;
                }
            }
        }
        std::vector<std::vector<int>> out(static_cast<std::size_t>(r));
        for (int p = 0; p < r; ++p) {
            out[static_cast<std::size_t>(p)] = sub[static_cast<std::size_t>(p)];
            if (p == q_part) continue;
            // Re-attach the highest point of the original part, falling back to
            // the highest unselected point above the pivot when the highest one
            // was already selected by the recursion.
            int best = -1;
            for (int i : idx_parts[static_cast<std::size_t>(p)]) {
                const auto& already = sub[static_cast<std::size_t>(p)];
                if (std::find(already.begin(), already.end(), i) != already.end()) continue;
                if (all[static_cast<std::size_t>(i)][axis] <= all[static_cast<std::size_t>(q_idx)][axis]) continue;
                if (best < 0 || all[static_cast<std::size_t>(i)][axis] > all[static_cast<std::size_t>(best)][axis]) {
                    best = i;
                }
            }
            if (best < 0) {
                throw InvariantViolation("stair_kirchberger_reduce: no re-attachable high point");
            }
            out[static_cast<std::size_t>(p)].push_back(best);
        }
        return out;
    };

    auto reduced_idx = reduce_rec(part_indices, d);
    std::vector<std::vector<ExactPoint>> reduced;
    reduced.reserve(reduced_idx.size());
    int total = 0;
    for (auto& idx : reduced_idx) {
        std::sort(idx.begin(), idx.end());
        std::vector<ExactPoint> part;
        part.reserve(idx.size());
        for (int i : idx) part.push_back(all[static_cast<std::size_t>(i)]);
        total += static_cast<int>(part.size());
        reduced.push_back(std::move(part));
    }
    if (total != t_param(d, r)) {
        throw InvariantViolation("stair_kirchberger_reduce: reduced size is not T(d,r)");
    }
    if (!stair_hull_intersection_point(reduced)) {
        throw InvariantViolation("stair_kirchberger_reduce: reduced hulls do not intersect");
    }
    return reduced;
}

} // namespace tvlab

#endif
