#ifndef TVLAB_STRETCHED_HPP
#define TVLAB_STRETCHED_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/parallel.hpp"
#include "tvlab/rational.hpp"
#include "tvlab/rng.hpp"
#include "tvlab/stair.hpp"
#include "tvlab/types.hpp"

// The stretched grid: an m^d grid whose axis-i values are powers of a base
// K_i chosen so that each axis dwarfs all previous ones.  Far-apart subsets
// of the grid have Euclidean convexity behave like stair-convexity, which the
// experiments below check partition by partition.

namespace tvlab {

inline Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// Bases K_1 = 2 and K_i = 2 d^2 K_{i-1}^m, the smallest integers obeying the
// required growth, so exact arithmetic stays as cheap as possible.
struct StretchedGridSpec {
    int dim = 0;
    int side = 0;              // m: points per axis
    std::vector<Int> k;        // the d bases
};

inline StretchedGridSpec stretched_grid(int d, int m) {
    if (d < 1) throw DimensionError("stretched_grid requires d >= 1");
    if (m < 2) throw PreconditionError("stretched_grid requires side length m >= 2");
    StretchedGridSpec spec;
    spec.dim = d;
    spec.side = m;
    spec.k.reserve(static_cast<std::size_t>(d));
    spec.k.emplace_back(2);
    for (int i = 2; i <= d; ++i) {
        spec.k.push_back(Int(2 * d * d) * int_pow(spec.k.back(), static_cast<unsigned long>(m)));
    }
    return spec;
}

// A grid point is its exponent vector a; its coordinates are (K_i^{a_i})_i.
struct GridPoint {
    std::vector<int> exponents;
};

inline void validate_grid_point(const StretchedGridSpec& spec, const GridPoint& p) {
    if (static_cast<int>(p.exponents.size()) != spec.dim) {
        throw DimensionError("grid point exponent count does not match the grid dimension");
    }
    for (int e : p.exponents) {
        if (e < 0 || e > spec.side - 1) {
            throw PreconditionError("grid point exponent outside {0..m-1}");
        }
    }
}

inline ExactPoint grid_coordinates(const StretchedGridSpec& spec, const GridPoint& p) {
    validate_grid_point(spec, p);
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(spec.dim));
    for (int i = 0; i < spec.dim; ++i) {
        coords.emplace_back(int_pow(spec.k[static_cast<std::size_t>(i)],
                                    static_cast<unsigned long>(p.exponents[static_cast<std::size_t>(i)])));
    }
    return ExactPoint(std::move(coords));
}

// The exponent vector as a point; stair-hull tests run on these directly,
// since stair membership only compares coordinates and the exponent order
// matches the coordinate order axis by axis.
inline ExactPoint exponent_point(const GridPoint& p) {
    std::vector<Rational> coords;
    coords.reserve(p.exponents.size());
    for (int e : p.exponents) coords.emplace_back(e);
    return ExactPoint(std::move(coords));
}

// Smallest side length accommodating a (2d+3)-spaced diagonal of the given
// length, and the doubled side used when sampling random far-apart subsets.
inline int diagonal_side(int d, int count) { return std::max(2, (2 * d + 3) * (count - 1) + 1); }
inline int sampling_side(int d, int count) { return std::max(2, 2 * (2 * d + 3) * (count - 1) + 1); }

struct StretchedDiagonal {
    StretchedGridSpec spec;
    std::vector<GridPoint> points;
};

// The diagonal: point j has every exponent equal to (2d+3)j, so any two of
// its points are (2d+3)-far apart in every direction.
inline StretchedDiagonal stretched_diagonal_grid(int d, int count) {
    if (d < 1) throw DimensionError("stretched_diagonal requires d >= 1");
    if (count < 1) throw PreconditionError("stretched_diagonal requires count >= 1");
    StretchedDiagonal diag;
    diag.spec = stretched_grid(d, diagonal_side(d, count));
    diag.points.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        diag.points.push_back(GridPoint{std::vector<int>(static_cast<std::size_t>(d), (2 * d + 3) * j)});
    }
    return diag;
}

inline PointSequence stretched_diagonal(int d, int count) {
    auto diag = stretched_diagonal_grid(d, count);
    std::vector<ExactPoint> pts;
    pts.reserve(diag.points.size());
    for (const GridPoint& p : diag.points) pts.push_back(grid_coordinates(diag.spec, p));
    return PointSequence(d, std::move(pts));
}

// Stretched distance in direction i: the difference of base-K_i logarithms.
// Exact (an integer) between grid points; floating point otherwise, with
// error far below the 1e-6 documentation budget (two 53-bit logs).
inline Rational stretched_distance(const StretchedGridSpec& spec, const GridPoint& p, const GridPoint& q, int axis) {
    validate_grid_point(spec, p);
    validate_grid_point(spec, q);
    if (axis < 0 || axis >= spec.dim) throw DimensionError("stretched_distance: axis out of range");
    return Rational(std::abs(p.exponents[static_cast<std::size_t>(axis)] - q.exponents[static_cast<std::size_t>(axis)]));
}

inline double stretched_distance(const StretchedGridSpec& spec, const ExactPoint& p, const ExactPoint& q, int axis) {
    if (p.dim() != spec.dim || q.dim() != spec.dim) {
        throw DimensionError("stretched_distance: point dimension does not match the grid");
    }
    if (axis < 0 || axis >= spec.dim) throw DimensionError("stretched_distance: axis out of range");
    const Rational& a = p[axis];
    const Rational& b = q[axis];
    if (a <= 0 || b <= 0) throw PreconditionError("stretched_distance requires positive coordinates");
    const double logk = log2_approx(spec.k[static_cast<std::size_t>(axis)]);
    return std::abs(log2_approx(a) - log2_approx(b)) / logk;
}

inline bool pairwise_far(const std::vector<GridPoint>& points, int c) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            for (std::size_t axis = 0; axis < points[i].exponents.size(); ++axis) {
                if (std::abs(points[i].exponents[axis] - points[j].exponents[axis]) < c) return false;
            }
        }
    }
    return true;
}

// The logarithmic rescaling onto the unit cube: coordinate i goes to
// log_{K_i}(x_i) / (m-1).  Grid points land on the uniform grid.
inline std::vector<double> pi_map(const StretchedGridSpec& spec, const ExactPoint& x) {
    if (x.dim() != spec.dim) throw DimensionError("pi_map: point dimension does not match the grid");
    std::vector<double> out(static_cast<std::size_t>(spec.dim), 0.0);
    for (int i = 0; i < spec.dim; ++i) {
        const Rational& xi = x[i];
        if (xi < 1) throw PreconditionError("pi_map: coordinate below the bounding box");
        const Int top = int_pow(spec.k[static_cast<std::size_t>(i)], static_cast<unsigned long>(spec.side - 1));
        if (xi > Rational(top)) throw PreconditionError("pi_map: coordinate above the bounding box");
        out[static_cast<std::size_t>(i)] =
            log2_approx(xi) / (log2_approx(spec.k[static_cast<std::size_t>(i)]) * (spec.side - 1));
    }
    return out;
}

inline std::vector<double> pi_map(const StretchedGridSpec& spec, const GridPoint& p) {
    validate_grid_point(spec, p);
    std::vector<double> out;
    out.reserve(p.exponents.size());
    for (int e : p.exponents) out.push_back(static_cast<double>(e) / (spec.side - 1));
    return out;
}

// Uniform random far-apart subsets: each axis draws fresh exponents until all
// pairwise gaps on that axis reach c.  Axes are independent, so per-axis
// retries sample exactly the same distribution as whole-vector rejection,
// just without the exponentially small acceptance rate.
inline std::vector<GridPoint> sample_far_apart(const StretchedGridSpec& spec, int count, int c, RandomEngine& engine) {
    if (count < 1) throw PreconditionError("sample_far_apart requires count >= 1");
    std::vector<GridPoint> pts(static_cast<std::size_t>(count),
                               GridPoint{std::vector<int>(static_cast<std::size_t>(spec.dim), 0)});
    constexpr int max_tries = 200000;
    for (int axis = 0; axis < spec.dim; ++axis) {
        std::vector<int> draw(static_cast<std::size_t>(count), 0);
        bool accepted = false;
        for (int tries = 0; tries < max_tries && !accepted; ++tries) {
            for (int i = 0; i < count; ++i) {
                draw[static_cast<std::size_t>(i)] =
                    static_cast<int>(rand_below(engine, static_cast<std::uint64_t>(spec.side)));
            }
            std::vector<int> sorted = draw;
            std::sort(sorted.begin(), sorted.end());
            accepted = true;
            for (int i = 0; i + 1 < count; ++i) {
                if (sorted[static_cast<std::size_t>(i) + 1] - sorted[static_cast<std::size_t>(i)] < c) {
                    accepted = false;
                    break;
                }
            }
        }
        if (!accepted) throw SamplingError("sample_far_apart: rejection budget exceeded");
        for (int i = 0; i < count; ++i) {
            pts[static_cast<std::size_t>(i)].exponents[static_cast<std::size_t>(axis)] =
                draw[static_cast<std::size_t>(i)];
        }
    }
    return pts;
}

// One partition's verdict under both convexity notions.
struct PartitionVerdict {
    std::vector<std::vector<int>> partition; // 1-based labels, canonical
    bool euclidean = false;
    bool stair = false;
};

struct TransferenceReport {
    int d = 0;
    int r = 0;
    std::uint64_t partitions_checked = 0;
    std::uint64_t euclidean_positive = 0;
    std::uint64_t stair_positive = 0;
    std::vector<PartitionVerdict> disagreements;
    std::vector<std::string> positive_types; // encodings of Euclidean-positive partitions, sorted
    bool agreed() const { return disagreements.empty(); }
};

// For every r-partition of a far-apart grid subset, compare the Euclidean
// Tverberg test on the exact coordinates against the stair-hull test on the
// exponent vectors.  The two verdicts are expected to coincide throughout.
inline TransferenceReport check_transference(const StretchedGridSpec& spec, const std::vector<GridPoint>& points,
                                             int r, int workers = 1) {
    const int d = spec.dim;
    if (r < 2) throw PreconditionError("check_transference requires r >= 2");
    if (static_cast<int>(points.size()) != t_param(d, r)) {
        throw PreconditionError("check_transference requires exactly T(d,r) grid points");
    }
    if (!pairwise_far(points, 2 * d + 3)) {
        throw PreconditionError("check_transference requires pairwise (2d+3)-far grid points");
    }
    std::vector<ExactPoint> coords, expts;
    for (const GridPoint& p : points) {
        coords.push_back(grid_coordinates(spec, p));
        expts.push_back(exponent_point(p));
    }
    const PointSequence seq(d, coords);
    const int n = static_cast<int>(points.size());
    const auto partitions = set_partitions(n, r);

    std::vector<PartitionVerdict> verdicts(partitions.size());
    parallel_for(partitions.size(), workers, [&](std::size_t idx) {
        const auto& parts0 = partitions[idx];
        PartitionVerdict v;
        v.partition.reserve(parts0.size());
        std::vector<std::vector<ExactPoint>> stair_parts;
        stair_parts.reserve(parts0.size());
        for (const auto& part : parts0) {
            std::vector<int> labels;
            std::vector<ExactPoint> sp;
            labels.reserve(part.size());
            sp.reserve(part.size());
            for (int i : part) {
                labels.push_back(i + 1);
                sp.push_back(expts[static_cast<std::size_t>(i)]);
            }
            v.partition.push_back(std::move(labels));
            stair_parts.push_back(std::move(sp));
        }
        const TverbergType type(d, r, v.partition);
        v.euclidean = verify_tverberg(seq, type).has_value();
        v.stair = stair_hull_intersection_point(stair_parts).has_value();
        verdicts[idx] = std::move(v);
    });

    TransferenceReport report;
    report.d = d;
    report.r = r;
    report.partitions_checked = verdicts.size();
    std::set<std::string> types;
    for (auto& v : verdicts) {
        if (v.euclidean) {
            ++report.euclidean_positive;
            types.insert(encode(TverbergType(d, r, v.partition)));
        }
        if (v.stair) ++report.stair_positive;
        if (v.euclidean != v.stair) report.disagreements.push_back(std::move(v));
    }
    report.positive_types.assign(types.begin(), types.end());
    return report;
}

struct SierksmaReport {
    int d = 0;
    int r = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int side = 0;
    std::uint64_t expected = 0;                     // (r-1)!^d
    std::map<std::uint64_t, int> distribution;      // partition count -> #trials
    bool constant() const {
        return distribution.size() == 1 && distribution.begin()->first == expected;
    }
};

// Random far-apart grid subsets of size T(d,r); counts Euclidean Tverberg
// partitions per trial.  The distribution is expected to be the single value
// (r-1)!^d.
inline SierksmaReport sierksma_experiment(int d, int r, int trials, std::uint64_t seed, int workers = 1) {
    if (d < 1 || d > 3 || r < 2 || r > 3) {
        throw PreconditionError("sierksma_experiment supports 1 <= d <= 3 and 2 <= r <= 3");
    }
    if (trials < 1) throw PreconditionError("sierksma_experiment requires at least one trial");
    const int big_t = t_param(d, r);
    SierksmaReport report;
    report.d = d;
    report.r = r;
    report.trials = trials;
    report.seed = seed;
    report.side = sampling_side(d, big_t);
    report.expected = expected_tverberg_count(d, r);
    const auto spec = stretched_grid(d, report.side);

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(trials), 0);
    parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t trial) {
        RandomEngine engine = seeded_engine(seed, trial);
        const auto pts = sample_far_apart(spec, big_t, 2 * d + 3, engine);
        std::vector<ExactPoint> coords;
        coords.reserve(pts.size());
        for (const GridPoint& p : pts) coords.push_back(grid_coordinates(spec, p));
        const PointSequence seq(d, std::move(coords));
        counts[trial] = enumerate_tverberg_partitions(seq, r).size();
    });
    for (std::uint64_t c : counts) ++report.distribution[c];
    return report;
}

// Tverberg types realized by the first T(d,r) diagonal points, sorted.
inline std::vector<std::string> diagonal_type_census(int d, int r, int workers = 1) {
    const int big_t = t_param(d, r);
    const PointSequence seq = stretched_diagonal(d, big_t);
    std::set<std::string> types;
    for (const auto& cert : enumerate_tverberg_partitions(seq, r, workers)) {
        types.insert(encode(cert.type));
    }
    return {types.begin(), types.end()};
}

struct ClosenessReport {
    int samples = 0;
    double max_deviation = 0.0; // in stretched units: pi-image sup distance * (m-1)
};

namespace stretched_detail {

// Sup-norm distance from a point to an axis-parallel segment, all in the
// pi-image cube.
inline double segment_distance(const std::vector<double>& x, const std::vector<double>& u,
                               const std::vector<double>& v) {
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lo = std::min(u[i], v[i]);
        const double hi = std::max(u[i], v[i]);
        double di = 0.0;
        if (x[i] < lo) di = lo - x[i];
        else if (x[i] > hi) di = x[i] - hi;
        best = std::max(best, di);
    }
    return best;
}

} // namespace stretched_detail

// Samples the straight segment between two grid points and measures how far
// (in stretched units) each sample sits from the stair-path between them.
// The pi-image of the stair-path is itself a polyline: each stair segment
// varies one coordinate monotonically, so its image is the axis-parallel
// segment between the images of its endpoints.
inline ClosenessReport closeness_probe(const StretchedGridSpec& spec, const GridPoint& a, const GridPoint& b,
                                       int samples) {
    validate_grid_point(spec, a);
    validate_grid_point(spec, b);
    if (samples < 1) throw PreconditionError("closeness_probe requires at least one sample");
    const ExactPoint pa = grid_coordinates(spec, a);
    const ExactPoint pb = grid_coordinates(spec, b);
    const StairPath path = stair_path(pa, pb);
    std::vector<std::vector<double>> images;
    images.reserve(path.vertices.size());
    for (const ExactPoint& v : path.vertices) images.push_back(pi_map(spec, v));

    ClosenessReport report;
    report.samples = samples;
    for (int k = 0; k <= samples; ++k) {
        Rational t(k, samples);
        t.canonicalize();
        std::vector<Rational> coords(static_cast<std::size_t>(spec.dim));
        for (int i = 0; i < spec.dim; ++i) {
            coords[static_cast<std::size_t>(i)] = pa[i] + t * (pb[i] - pa[i]);
        }
        const auto img = pi_map(spec, ExactPoint(std::move(coords)));
        double nearest = stretched_detail::segment_distance(img, images.front(), images.front());
        for (std::size_t s = 0; s + 1 < images.size(); ++s) {
            nearest = std::min(nearest, stretched_detail::segment_distance(img, images[s], images[s + 1]));
        }
        report.max_deviation = std::max(report.max_deviation, nearest * (spec.side - 1));
    }
    return report;
}

} // namespace tvlab

#endif
