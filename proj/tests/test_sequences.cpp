#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/sequences.hpp"

using namespace tvlab;

namespace {

bool same_points(const PointSequence& a, const PointSequence& b) {
    if (a.dim() != b.dim() || a.size() != b.size()) return false;
    for (int label = 1; label <= a.size(); ++label) {
        if (!(a.point(label) == b.point(label))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("moment_curve_sequence lists powers of the parameter") {
    const PointSequence seq = moment_curve_sequence(3, 4);
    CHECK(seq.dim() == 3);
    CHECK(seq.size() == 4);
    CHECK(seq.point(2) == make_point({2, 4, 8}));
    CHECK(seq.point(3) == make_point({3, 9, 27}));
}

TEST_CASE("moment curve sequences are generic and positively oriented") {
    for (int d = 1; d <= 4; ++d) {
        const PointSequence seq = moment_curve_sequence(d, d + 4);
        CHECK(seq.generic());
        CHECK(seq.orientation_homogeneous());
        std::vector<ExactPoint> first_tuple;
        for (int label = 1; label <= d + 1; ++label) first_tuple.push_back(seq.point(label));
        CHECK(orientation(first_tuple) == Sign::positive);
    }
}

TEST_CASE("moment_curve_sequence validates parameters") {
    CHECK_THROWS_AS(moment_curve_sequence(0, 4), DimensionError);
    CHECK_THROWS_AS(moment_curve_sequence(2, {Rational(1), Rational(1)}), PreconditionError);
    CHECK_THROWS_AS(moment_curve_sequence(2, {Rational(3), Rational(2)}), PreconditionError);
    Rational half(1, 2);
    half.canonicalize();
    CHECK_NOTHROW(moment_curve_sequence(2, {Rational(0), half, Rational(2)}));
}

TEST_CASE("random_homogeneous_sequence on the line is sorted and distinct") {
    const PointSequence seq = random_homogeneous_sequence(1, 9, 5);
    CHECK(seq.size() == 9);
    for (int label = 1; label < 9; ++label) {
        CHECK(seq.point(label)[0] < seq.point(label + 1)[0]);
    }
}

TEST_CASE("random_homogeneous_sequence is generic and homogeneous") {
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 7}, {3, 8}, {4, 7}}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const PointSequence seq = random_homogeneous_sequence(d, n, seed);
            CHECK(seq.dim() == d);
            CHECK(seq.size() == n);
            CHECK(seq.generic());
            CHECK(seq.orientation_homogeneous());
        }
    }
}

TEST_CASE("random_homogeneous_sequence is deterministic in the seed") {
    for (int d = 1; d <= 3; ++d) {
        const PointSequence a = random_homogeneous_sequence(d, 6, 42);
        const PointSequence b = random_homogeneous_sequence(d, 6, 42);
        const PointSequence c = random_homogeneous_sequence(d, 6, 43);
        CHECK(same_points(a, b));
        CHECK_FALSE(same_points(a, c));
    }
    CHECK_THROWS_AS(random_homogeneous_sequence(0, 5, 1), DimensionError);
    CHECK_THROWS_AS(random_homogeneous_sequence(2, 0, 1), PreconditionError);
}

TEST_CASE("family kind names round-trip") {
    for (const auto kind : {SequenceFamily::Kind::moment_curve, SequenceFamily::Kind::perturbed_convex,
                            SequenceFamily::Kind::stretched_diagonal}) {
        CHECK(family_kind_from_name(family_kind_name(kind)) == kind);
    }
    CHECK(family_kind_name(SequenceFamily::Kind::perturbed_convex) == "perturbed-convex");
    CHECK_THROWS_AS(family_kind_from_name("zigzag"), ParseError);
}

TEST_CASE("family_instance is deterministic in seed, length, and instance") {
    for (const auto kind : {SequenceFamily::Kind::moment_curve, SequenceFamily::Kind::perturbed_convex}) {
        SequenceFamily family;
        family.kind = kind;
        family.dim = 2;
        family.seed = 9;
        const PointSequence a = family_instance(family, 6, 0);
        const PointSequence b = family_instance(family, 6, 0);
        const PointSequence c = family_instance(family, 6, 1);
        CHECK(same_points(a, b));
        CHECK_FALSE(same_points(a, c));
        CHECK(a.generic());
        CHECK(a.orientation_homogeneous());
        CHECK_FALSE(family_is_deterministic(family));
    }
}

TEST_CASE("the stretched-diagonal family ignores seed and instance") {
    SequenceFamily family;
    family.kind = SequenceFamily::Kind::stretched_diagonal;
    family.dim = 2;
    family.seed = 1;
    CHECK(family_is_deterministic(family));
    const PointSequence a = family_instance(family, 5, 0);
    family.seed = 77;
    const PointSequence b = family_instance(family, 5, 3);
    CHECK(same_points(a, b));
    CHECK(same_points(a, stretched_diagonal(2, 5)));
}

TEST_CASE("family instances across dimensions stay homogeneous") {
    for (int d = 1; d <= 3; ++d) {
        SequenceFamily family;
        family.kind = SequenceFamily::Kind::perturbed_convex;
        family.dim = d;
        family.seed = 31;
        const PointSequence seq = family_instance(family, t_param(d, 2) + 1, 2);
        CHECK(seq.dim() == d);
        if (d >= 2) {
            CHECK(seq.generic());
            CHECK(seq.orientation_homogeneous());
        }
    }
}
