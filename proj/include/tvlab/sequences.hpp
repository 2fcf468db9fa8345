#ifndef TVLAB_SEQUENCES_HPP
#define TVLAB_SEQUENCES_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/rational.hpp"
#include "tvlab/rng.hpp"
#include "tvlab/stretched.hpp"

// Generators of generic, orientation-homogeneous point sequences: the moment
// curve, randomized convex-position families, and the stretched diagonal.
// Property tests draw from several families so they do not overfit to one.

namespace tvlab {

// Points (t, t^2, ..., t^d) for strictly increasing parameters t.  Vertices
// of a cyclic polytope: generic, and every orientation is positive.
inline PointSequence moment_curve_sequence(int d, const std::vector<Rational>& t_values) {
    if (d < 1) throw DimensionError("moment_curve_sequence requires d >= 1");
    for (std::size_t i = 0; i + 1 < t_values.size(); ++i) {
        if (!(t_values[i] < t_values[i + 1])) {
            throw PreconditionError("moment_curve_sequence requires strictly increasing parameters");
        }
    }
    std::vector<ExactPoint> pts;
    pts.reserve(t_values.size());
    for (const Rational& t : t_values) {
        std::vector<Rational> coords(static_cast<std::size_t>(d));
        Rational power(1);
        for (int k = 0; k < d; ++k) {
            power *= t;
            coords[static_cast<std::size_t>(k)] = power;
        }
        pts.emplace_back(std::move(coords));
    }
    return PointSequence(d, std::move(pts));
}

inline PointSequence moment_curve_sequence(int d, int n) {
    std::vector<Rational> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) t.emplace_back(i);
    return moment_curve_sequence(d, t);
}

namespace seq_detail {

inline std::vector<long long> distinct_sorted_integers(RandomEngine& engine, int n, long long radius) {
    std::set<long long> chosen;
    while (static_cast<int>(chosen.size()) < n) {
        chosen.insert(rand_between(engine, -radius, radius));
    }
    return {chosen.begin(), chosen.end()};
}

// n points in convex position listed in boundary order: rational points on
// the unit circle via the tangent half-angle map (monotone in the angle),
// pushed through a random orientation-preserving affine map so the instances
// are not all inscribed in one circle.
inline PointSequence random_convex_planar(RandomEngine& engine, int n) {
    const auto params = distinct_sorted_integers(engine, n, 4LL * n * n + 8);
    long a, b, c, e;
    do {
        a = static_cast<long>(rand_between(engine, -4, 4));
        b = static_cast<long>(rand_between(engine, -4, 4));
        c = static_cast<long>(rand_between(engine, -4, 4));
        e = static_cast<long>(rand_between(engine, -4, 4));
    } while (a * e - b * c <= 0);
    const long f = static_cast<long>(rand_between(engine, -9, 9));
    const long g = static_cast<long>(rand_between(engine, -9, 9));
    std::vector<ExactPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long long t : params) {
        const Rational tt(static_cast<long>(t));
        const Rational denom = 1 + tt * tt;
        const Rational x = (1 - tt * tt) / denom;
        const Rational y = (2 * tt) / denom;
        pts.push_back(ExactPoint{{a * x + b * y + f, c * x + e * y + g}});
    }
    return PointSequence(2, std::move(pts));
}

// Moment curve at t = 1..n with shrinking random jitter, rejected until the
// jittered sequence is generic and orientation-homogeneous again.
inline PointSequence perturbed_moment_curve(RandomEngine& engine, int d, int n) {
    constexpr int max_attempts = 48;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Rational eps(1);
        eps /= Int(1) << (4 + 2 * attempt);
        std::vector<ExactPoint> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
            std::vector<Rational> coords(static_cast<std::size_t>(d));
            Rational power(1);
            for (int k = 0; k < d; ++k) {
                power *= i;
                Rational jitter(static_cast<long>(rand_between(engine, -1000, 1000)), 1000L);
                jitter.canonicalize();
                coords[static_cast<std::size_t>(k)] = power + eps * jitter;
            }
            pts.emplace_back(std::move(coords));
        }
        PointSequence seq(d, std::move(pts));
        if (seq.generic() && seq.orientation_homogeneous()) return seq;
    }
    throw SamplingError("perturbed_moment_curve: rejection budget exceeded");
}

} // namespace seq_detail

// A random generic, orientation-homogeneous sequence.  In the plane this is
// a convex-position sequence in boundary order; on the line, sorted distinct
// values; in higher dimension, a perturbed moment curve.
inline PointSequence random_homogeneous_sequence(int d, int n, std::uint64_t seed) {
    if (d < 1) throw DimensionError("random_homogeneous_sequence requires d >= 1");
    if (n < 1) throw PreconditionError("random_homogeneous_sequence requires n >= 1");
    RandomEngine engine = seeded_engine(seed);
    if (d == 1) {
        const auto values = seq_detail::distinct_sorted_integers(engine, n, 4LL * n * n + 8);
        std::vector<ExactPoint> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (long long v : values) pts.push_back(ExactPoint{{Rational(static_cast<long>(v))}});
        return PointSequence(1, std::move(pts));
    }
    if (d == 2) return seq_detail::random_convex_planar(engine, n);
    return seq_detail::perturbed_moment_curve(engine, d, n);
}

// A named source of sequences for scanning experiments.
struct SequenceFamily {
    enum class Kind { moment_curve, perturbed_convex, stretched_diagonal };
    Kind kind = Kind::perturbed_convex;
    int dim = 2;
    std::uint64_t seed = 0;
};

inline std::string family_kind_name(SequenceFamily::Kind kind) {
    switch (kind) {
        case SequenceFamily::Kind::moment_curve: return "moment-curve";
        case SequenceFamily::Kind::perturbed_convex: return "perturbed-convex";
        case SequenceFamily::Kind::stretched_diagonal: return "stretched-diagonal";
    }
    throw PreconditionError("unknown family kind");
}

inline SequenceFamily::Kind family_kind_from_name(const std::string& name) {
    if (name == "moment-curve") return SequenceFamily::Kind::moment_curve;
    if (name == "perturbed-convex") return SequenceFamily::Kind::perturbed_convex;
    if (name == "stretched-diagonal") return SequenceFamily::Kind::stretched_diagonal;
    throw ParseError("unknown sequence family '" + name + "'");
}

// How many distinct instances the family offers per length: the diagonal is
// deterministic, the randomized families are unbounded.
inline bool family_is_deterministic(const SequenceFamily& family) {
    return family.kind == SequenceFamily::Kind::stretched_diagonal;
}

// The instance-th length-n member of the family, deterministic in
// (seed, n, instance).
inline PointSequence family_instance(const SequenceFamily& family, int n, int instance) {
    const auto stream = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(n)) << 32) |
                        static_cast<std::uint64_t>(static_cast<std::uint32_t>(instance));
    switch (family.kind) {
        case SequenceFamily::Kind::moment_curve: {
            RandomEngine engine = seeded_engine(family.seed, stream);
            const auto values = seq_detail::distinct_sorted_integers(engine, n, 4LL * n * n + 8);
            std::vector<Rational> t;
            t.reserve(values.size());
            for (long long v : values) t.emplace_back(static_cast<long>(v));
            return moment_curve_sequence(family.dim, t);
        }
        case SequenceFamily::Kind::perturbed_convex: {
            RandomEngine engine = seeded_engine(family.seed, stream);
            if (family.dim == 1) {
                const auto values = seq_detail::distinct_sorted_integers(engine, n, 4LL * n * n + 8);
                std::vector<ExactPoint> pts;
                for (long long v : values) pts.push_back(ExactPoint{{Rational(static_cast<long>(v))}});
                return PointSequence(1, std::move(pts));
            }
            if (family.dim == 2) return seq_detail::random_convex_planar(engine, n);
            return seq_detail::perturbed_moment_curve(engine, family.dim, n);
        }
        case SequenceFamily::Kind::stretched_diagonal:
            return stretched_diagonal(family.dim, n);
    }
    throw PreconditionError("unknown family kind");
}

} // namespace tvlab

#endif
