#ifndef TVLAB_CONVEX_HPP
#define TVLAB_CONVEX_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/parallel.hpp"
#include "tvlab/types.hpp"

namespace tvlab {

// The Radon partition of d+2 generic points: the unique split into two index
// sets whose convex hulls meet, together with the single intersection point.
struct RadonResult {
    std::vector<int> first_part;  // 1-based labels; contains label 1
    std::vector<int> second_part;
    ExactPoint radon_point;
    std::vector<Rational> coefficients; // per label: positive convex weight inside its part
};

// Solves the affine dependency sum(a_i) = 0, sum(a_i p_i) = 0 with a_1 = 1
// pinned.  For generic points the dependency is unique up to scale and has no
// zero entry, so the signs of the a_i split the labels into the two parts and
// the normalized positive combination is the Radon point.
inline RadonResult radon_partition(const PointSequence& seq) {
    const int d = seq.dim();
    const int n = seq.size();
    if (n != d + 2) throw DimensionError("radon_partition requires exactly d+2 points");

    Matrix m(n, n);
    std::vector<Rational> rhs(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) m.at(0, j) = 1;            // sum of coefficients is zero
    for (int i = 0; i < d; ++i) {                          // coordinatewise dependency
        for (int j = 0; j < n; ++j) m.at(i + 1, j) = seq.point(j + 1)[i];
    }
    for (int j = 0; j < n; ++j) m.at(n - 1, j) = 0;        // pin a_1 = 1
    m.at(n - 1, 0) = 1;
    rhs[static_cast<std::size_t>(n) - 1] = 1;

    std::vector<Rational> alpha;
    try {
        alpha = solve_linear(m, rhs);
    } catch (const SingularSystemError&) {
        throw GenericityError("radon_partition: degenerate (d+2)-point configuration");
    }

    RadonResult out;
    Rational positive_sum(0);
    for (int j = 0; j < n; ++j) {
        const Sign s = sign_of(alpha[static_cast<std::size_t>(j)]);
        if (s == Sign::zero) {
            throw GenericityError("radon_partition: zero coefficient at label " + label_string(j + 1));
        }
        if (s == Sign::positive) {
            out.first_part.push_back(j + 1);
            positive_sum += alpha[static_cast<std::size_t>(j)];
        } else {
            out.second_part.push_back(j + 1);
        }
    }

    std::vector<Rational> point(static_cast<std::size_t>(d), Rational(0));
    out.coefficients.assign(static_cast<std::size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) {
        Rational w = alpha[static_cast<std::size_t>(j)] / positive_sum;
        if (sgn(w) < 0) w = -w;
        w.canonicalize();
        if (std::binary_search(out.first_part.begin(), out.first_part.end(), j + 1)) {
            for (int i = 0; i < d; ++i) point[static_cast<std::size_t>(i)] += w * seq.point(j + 1)[i];
        }
        out.coefficients[static_cast<std::size_t>(j)] = std::move(w);
    }
    for (auto& c : point) c.canonicalize();
    out.radon_point = ExactPoint(std::move(point));
    return out;
}

// Strict containment of q in the open simplex spanned by d+1 points: q sees
// every facet from the same side as the opposite vertex.  A zero sign means q
// lies on a facet hyperplane and the query is degenerate.
inline bool point_in_simplex(const ExactPoint& q, const std::vector<ExactPoint>& simplex) {
    const int d = q.dim();
    if (static_cast<int>(simplex.size()) != d + 1) {
        throw DimensionError("point_in_simplex requires d+1 vertices");
    }
    std::vector<ExactPoint> tuple(simplex.begin(), simplex.end());
    const Sign base = orientation(tuple);
    if (base == Sign::zero) throw GenericityError("point_in_simplex: flat simplex");
    for (int v = 0; v <= d; ++v) {
        std::vector<ExactPoint> facet = tuple;
        facet[static_cast<std::size_t>(v)] = q;
        const Sign s = orientation(facet);
        if (s == Sign::zero) {
            throw GenericityError("point_in_simplex: query point on a facet hyperplane");
        }
        if (s != base) return false;
    }
    return true;
}

// A verified Tverberg partition: the common point and the positive convex
// weights, one per label, that express it inside every part.
struct TverbergCertificate {
    TverbergType type;
    ExactPoint tverberg_point;
    std::vector<Rational> coefficients; // indexed by label - 1
};

// Decides whether a type is realized as a Tverberg partition of the sequence.
// Unknowns are the per-point weights, grouped part by part (the first part's
// weights are the first eliminated).  Equations: each part's weights sum to
// one, and every later part's combination equals the first part's.  The
// square system is solved exactly; a certificate exists iff every weight is
// strictly positive.  A singular system means the configuration is not
// generic for this type.
inline std::optional<TverbergCertificate> verify_tverberg(const PointSequence& seq, const TverbergType& type) {
    const int d = seq.dim();
    const int r = type.r();
    const int t = t_param(d, r);
    if (type.d() != d) throw DimensionError("type dimension does not match sequence dimension");
    if (seq.size() != t) {
        throw DimensionError("verify_tverberg requires exactly T(d,r) = " + std::to_string(t) + " points");
    }

    // A part of d+2 or more points carries an affine dependency, which sits
    // in the kernel of the system below no matter where the points are; and
    // in general position a type with such a part has no common point (the
    // other parts' hull flats alone are already over-constrained).  Reject
    // these types without solving, so a singular system further down really
    // does signal degenerate position.
    for (const auto& part : type.parts()) {
        if (static_cast<int>(part.size()) > d + 1) return std::nullopt;
    }

    // Variable order: labels grouped by canonical part.
    std::vector<int> var_label;
    var_label.reserve(static_cast<std::size_t>(t));
    std::vector<int> part_begin;
    for (const auto& part : type.parts()) {
        part_begin.push_back(static_cast<int>(var_label.size()));
        for (int label : part) var_label.push_back(label);
    }
    part_begin.push_back(t);

    Matrix m(t, t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) m.at(i, j) = 0;
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(t), Rational(0));
    for (int p = 0; p < r; ++p) { // each part is a convex combination
        for (int v = part_begin[static_cast<std::size_t>(p)]; v < part_begin[static_cast<std::size_t>(p) + 1]; ++v) {
            m.at(p, v) = 1;
        }
        rhs[static_cast<std::size_t>(p)] = 1;
    }
    for (int p = 1; p < r; ++p) { // part p's point equals part 0's point
        for (int i = 0; i < d; ++i) {
            const int row = r + (p - 1) * d + i;
            for (int v = part_begin[0]; v < part_begin[1]; ++v) {
                m.at(row, v) = -seq.point(var_label[static_cast<std::size_t>(v)])[i];
            }
            for (int v = part_begin[static_cast<std::size_t>(p)]; v < part_begin[static_cast<std::size_t>(p) + 1]; ++v) {
                m.at(row, v) = seq.point(var_label[static_cast<std::size_t>(v)])[i];
            }
        }
    }

    std::vector<Rational> w;
    try {
        w = solve_linear(m, rhs);
    } catch (const SingularSystemError&) {
        throw GenericityError("verify_tverberg: singular system; configuration not generic for this type");
    }

    for (const Rational& wi : w) {
        if (sgn(wi) <= 0) return std::nullopt;
    }

    std::vector<Rational> point(static_cast<std::size_t>(d), Rational(0));
    for (int v = part_begin[0]; v < part_begin[1]; ++v) {
        for (int i = 0; i < d; ++i) {
            point[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(v)] * seq.point(var_label[static_cast<std::size_t>(v)])[i];
        }
    }
    for (auto& c : point) c.canonicalize();

    TverbergCertificate cert{type, ExactPoint(std::move(point)), std::vector<Rational>(static_cast<std::size_t>(t))};
    for (int v = 0; v < t; ++v) {
        cert.coefficients[static_cast<std::size_t>(var_label[static_cast<std::size_t>(v)]) - 1] = w[static_cast<std::size_t>(v)];
    }
    return cert;
}

// All Tverberg partitions of a T(d,r)-point sequence into r parts, in the
// canonical partition order.
inline std::vector<TverbergCertificate> enumerate_tverberg_partitions(const PointSequence& seq, int r,
                                                                      int workers = 1) {
    const int d = seq.dim();
    if (r < 2) throw PreconditionError("enumerate_tverberg_partitions requires r >= 2");
    const int t = t_param(d, r);
    if (seq.size() != t) {
        throw DimensionError("enumerate_tverberg_partitions requires exactly T(d,r) points");
    }
    std::vector<TverbergType> candidates;
    for_each_set_partition(t, r, [&](const std::vector<std::vector<int>>& parts0) {
        std::vector<std::vector<int>> parts;
        parts.reserve(parts0.size());
        for (const auto& p : parts0) {
            std::vector<int> q;
            q.reserve(p.size());
            for (int x : p) q.push_back(x + 1);
            parts.push_back(std::move(q));
        }
        candidates.emplace_back(d, r, std::move(parts));
        return true;
    });

    std::vector<std::optional<TverbergCertificate>> found(candidates.size());
    parallel_for(candidates.size(), workers, [&](std::size_t i) {
        found[i] = verify_tverberg(seq, candidates[i]);
    });

    std::vector<TverbergCertificate> out;
    for (auto& cert : found) {
        if (cert) out.push_back(std::move(*cert));
    }
    return out;
}

// Central projection of the companions of one endpoint onto a hyperplane
// separating it from their centroid, re-expressed in a (d-1)-dimensional
// coordinate chart.  The chart is chosen so that for any d companions
// x_1, ..., x_d,
//
//     orientation(chart(x_1'), ..., chart(x_d'))
//         = orientation(x_1, ..., x_d, center),
//
// which is the sign convention under which projection preserves orientation
// homogeneity.  Each companion must make a positive angle with the direction
// from the center to the centroid; otherwise its projection ray misses the
// hyperplane and the input is rejected.
inline PointSequence central_project(const PointSequence& seq, bool from_last = false) {
    const int d = seq.dim();
    const int n = seq.size();
    if (d < 2) throw DimensionError("central_project requires d >= 2");
    if (n < 3) throw PreconditionError("central_project requires at least three points");

    const int center_label = from_last ? n : 1;
    const ExactPoint& center = seq.point(center_label);
    std::vector<const ExactPoint*> rest;
    rest.reserve(static_cast<std::size_t>(n) - 1);
    for (int label = 1; label <= n; ++label) {
        if (label != center_label) rest.push_back(&seq.point(label));
    }

    // Hyperplane H = { x : <normal, x> = beta }, the perpendicular bisector of
    // the segment from the center to the centroid of the rest.
    std::vector<Rational> normal(static_cast<std::size_t>(d), Rational(0));
    for (const ExactPoint* q : rest) {
        for (int i = 0; i < d; ++i) normal[static_cast<std::size_t>(i)] += (*q)[i];
    }
    const Rational k(static_cast<long>(rest.size()));
    bool normal_zero = true;
    for (int i = 0; i < d; ++i) {
        normal[static_cast<std::size_t>(i)] = normal[static_cast<std::size_t>(i)] / k - center[i];
        normal[static_cast<std::size_t>(i)].canonicalize();
        if (sgn(normal[static_cast<std::size_t>(i)]) != 0) normal_zero = false;
    }
    if (normal_zero) throw GenericityError("central_project: centroid coincides with the center");

    Rational norm_sq(0);
    Rational center_dot(0);
    for (int i = 0; i < d; ++i) {
        norm_sq += normal[static_cast<std::size_t>(i)] * normal[static_cast<std::size_t>(i)];
        center_dot += normal[static_cast<std::size_t>(i)] * center[i];
    }
    const Rational beta = center_dot + norm_sq / 2;

    // Project each companion along the ray from the center.
    std::vector<ExactPoint> on_plane;
    on_plane.reserve(rest.size());
    for (const ExactPoint* q : rest) {
        Rational dir(0);
        for (int i = 0; i < d; ++i) dir += normal[static_cast<std::size_t>(i)] * ((*q)[i] - center[i]);
        if (sgn(dir) <= 0) {
            throw GenericityError("central_project: companion not on the centroid side of the center");
        }
        const Rational s = (beta - center_dot) / dir;
        std::vector<Rational> image(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            image[static_cast<std::size_t>(i)] = center[i] + s * ((*q)[i] - center[i]);
            image[static_cast<std::size_t>(i)].canonicalize();
        }
        on_plane.emplace_back(std::move(image));
    }

    // Chart: drop the first coordinate axis along which the normal is nonzero.
    int drop = 0;
    while (sgn(normal[static_cast<std::size_t>(drop)]) == 0) ++drop;

    // Orientation factor of the chart: evaluate the defining determinant on an
    // affine frame of H (preimages of the chart origin and unit points).
    auto lift = [&](const std::vector<Rational>& chart) {
        std::vector<Rational> x(static_cast<std::size_t>(d), Rational(0));
        Rational acc = beta;
        int c = 0;
        for (int i = 0; i < d; ++i) {
            if (i == drop) continue;
            x[static_cast<std::size_t>(i)] = chart[static_cast<std::size_t>(c)];
            acc -= normal[static_cast<std::size_t>(i)] * chart[static_cast<std::size_t>(c)];
            ++c;
        }
        x[static_cast<std::size_t>(drop)] = acc / normal[static_cast<std::size_t>(drop)];
        x[static_cast<std::size_t>(drop)].canonicalize();
        return ExactPoint(std::move(x));
    };
    std::vector<ExactPoint> frame;
    frame.reserve(static_cast<std::size_t>(d) + 1);
    frame.push_back(lift(std::vector<Rational>(static_cast<std::size_t>(d) - 1, Rational(0))));
    for (int j = 0; j + 1 < d; ++j) {
        std::vector<Rational> e(static_cast<std::size_t>(d) - 1, Rational(0));
        e[static_cast<std::size_t>(j)] = 1;
        frame.push_back(lift(e));
    }
    frame.push_back(center);
    const Sign lambda = orientation(frame);
    if (lambda == Sign::zero) {
        throw InvariantViolation("central_project: degenerate chart frame");
    }

    std::vector<ExactPoint> chart_points;
    chart_points.reserve(on_plane.size());
    for (const ExactPoint& x : on_plane) {
        std::vector<Rational> y;
        y.reserve(static_cast<std::size_t>(d) - 1);
        for (int i = 0; i < d; ++i) {
            if (i != drop) y.push_back(x[i]);
        }
        if (lambda == Sign::negative) y[0] = -y[0];
        chart_points.emplace_back(std::move(y));
    }
    return PointSequence(d - 1, std::move(chart_points));
}

// Do the closed convex hulls of two disjoint label sets intersect?  Supports
// |I| + |J| equal to d+2 (the solution of the affine system is unique and the
// answer is its sign pattern) and d+3 (the solutions form a line; the answer
// is whether it meets the nonnegative orthant).  This is the small exact
// feasibility test used to cross-validate combinatorial criteria.
inline bool pair_hulls_intersect(const PointSequence& seq, std::vector<int> first, std::vector<int> second) {
    const int d = seq.dim();
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    const int m = static_cast<int>(first.size() + second.size());
    for (int a : first) {
        if (std::binary_search(second.begin(), second.end(), a)) {
            throw PreconditionError("pair_hulls_intersect: label sets must be disjoint");
        }
    }
    if (first.empty() || second.empty()) throw PreconditionError("pair_hulls_intersect: empty side");
    if (m != d + 2 && m != d + 3) {
        throw PreconditionError("pair_hulls_intersect supports d+2 or d+3 labels in total");
    }

    // Unknowns: weights for `first`, then weights for `second`.
    // Rows: sum(first) = 1, sum(second) = 1, combination(first) = combination(second).
    const int rows = d + 2;
    auto fill = [&](Matrix& mat, int var, int label, bool in_first) {
        mat.at(0, var) = in_first ? 1 : 0;
        mat.at(1, var) = in_first ? 0 : 1;
        for (int i = 0; i < d; ++i) {
            mat.at(2 + i, var) = in_first ? seq.point(label)[i] : -seq.point(label)[i];
        }
    };

    if (m == rows) {
        Matrix mat(rows, rows);
        int var = 0;
        for (int label : first) fill(mat, var++, label, true);
        for (int label : second) fill(mat, var++, label, false);
        std::vector<Rational> rhs(static_cast<std::size_t>(rows), Rational(0));
        rhs[0] = 1;
        rhs[1] = 1;
        std::vector<Rational> w;
        try {
            w = solve_linear(mat, rhs);
        } catch (const SingularSystemError&) {
            throw GenericityError("pair_hulls_intersect: degenerate configuration");
        }
        for (const Rational& wi : w) {
            if (sgn(wi) < 0) return false;
        }
        return true;
    }

    // One-parameter family: find a particular solution with one unknown pinned
    // to zero and a homogeneous solution with the same unknown pinned to one,
    // then intersect the nonnegativity constraints along the line.
    for (int pin = 0; pin < m; ++pin) {
        Matrix mat(rows, rows);
        std::vector<int> vars; // unknown indices other than `pin`
        for (int v = 0; v < m; ++v) {
            if (v != pin) vars.push_back(v);
        }
        auto label_of = [&](int v) { return v < static_cast<int>(first.size())
                                                ? first[static_cast<std::size_t>(v)]
                                                : second[static_cast<std::size_t>(v) - first.size()]; };
        auto in_first = [&](int v) { return v < static_cast<int>(first.size()); };
        for (int c = 0; c < rows; ++c) fill(mat, c, label_of(vars[static_cast<std::size_t>(c)]), in_first(vars[static_cast<std::size_t>(c)]));

        // Column of the pinned unknown, used for both right-hand sides.
        std::vector<Rational> pin_col(static_cast<std::size_t>(rows), Rational(0));
        {
            pin_col[0] = in_first(pin) ? 1 : 0;
            pin_col[1] = in_first(pin) ? 0 : 1;
            for (int i = 0; i < d; ++i) {
                pin_col[static_cast<std::size_t>(2 + i)] =
                    in_first(pin) ? seq.point(label_of(pin))[i] : -seq.point(label_of(pin))[i];
            }
        }

        std::vector<Rational> rhs_particular(static_cast<std::size_t>(rows), Rational(0));
        rhs_particular[0] = 1;
        rhs_particular[1] = 1;
        std::vector<Rational> rhs_homogeneous(static_cast<std::size_t>(rows), Rational(0));
        for (int i = 0; i < rows; ++i) rhs_homogeneous[static_cast<std::size_t>(i)] = -pin_col[static_cast<std::size_t>(i)];

        std::vector<Rational> x0, v0;
        try {
            x0 = solve_linear(mat, rhs_particular);
            v0 = solve_linear(mat, rhs_homogeneous);
        } catch (const SingularSystemError&) {
            continue; // this pin does not span the solution line; try the next
        }

        // Solutions: w(pin) = t, w(vars[c]) = x0[c] + t v0[c].  Nonnegativity
        // of every weight restricts t to an interval.
        std::optional<Rational> lo, hi;
        bool feasible = true;
        // w(pin) = t >= 0
        Rational zero(0);
        lo = zero;
        for (int c = 0; c < rows && feasible; ++c) {
            const Rational& base = x0[static_cast<std::size_t>(c)];
            const Rational& slope = v0[static_cast<std::size_t>(c)];
            if (sgn(slope) == 0) {
                if (sgn(base) < 0) feasible = false;
            } else {
                Rational bound = -base / slope;
                bound.canonicalize();
                if (sgn(slope) > 0) {
                    if (!lo || bound > *lo) lo = bound;
                } else {
                    if (!hi || bound < *hi) hi = bound;
                }
            }
        }
        if (!feasible) return false;
        if (lo && hi && *lo > *hi) return false;
        return true;
    }
    throw GenericityError("pair_hulls_intersect: solution family could not be parameterized");
}

} // namespace tvlab

#endif
