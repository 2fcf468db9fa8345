#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/sequences.hpp"
#include "tvlab/types.hpp"

using namespace tvlab;

namespace {

PointSequence planar4() {
    return PointSequence(2, {make_point({0, 0}), make_point({4, 0}), make_point({0, 4}), make_point({1, 1})});
}

PointSequence pentagon() {
    return PointSequence(2, {make_point({0, 0}), make_point({4, 0}), make_point({6, 3}), make_point({3, 6}),
                             make_point({-1, 3})});
}

// The perturbed Sierksma configuration for d = 2, r = 3: three doubled
// triangle vertices plus a near-center point, nudged into general position.
PointSequence sierksma_d2_r3() {
    auto rat = [](long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    std::vector<ExactPoint> pts;
    pts.emplace_back(std::vector<Rational>{rat(0, 1), rat(0, 1)});
    pts.emplace_back(std::vector<Rational>{rat(1, 3), rat(1, 5)});
    pts.emplace_back(std::vector<Rational>{rat(8, 1), rat(0, 1)});
    pts.emplace_back(std::vector<Rational>{rat(57, 7), rat(1, 11)});
    pts.emplace_back(std::vector<Rational>{rat(0, 1), rat(8, 1)});
    pts.emplace_back(std::vector<Rational>{rat(1, 13), rat(137, 17)});
    pts.emplace_back(std::vector<Rational>{rat(27, 10), rat(14, 5)});
    return PointSequence(2, std::move(pts));
}

// All splits of {1..n} into two nonempty parts, first part containing 1.
std::vector<std::pair<std::vector<int>, std::vector<int>>> all_two_splits(int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> first{1}, second;
        for (int label = 2; label <= n; ++label) {
            if (mask & (1u << (label - 2))) {
                first.push_back(label);
            } else {
                second.push_back(label);
            }
        }
        if (!second.empty()) out.emplace_back(std::move(first), std::move(second));
    }
    return out;
}

void check_certificate(const PointSequence& seq, const TverbergCertificate& cert) {
    for (const auto& part : cert.type.parts()) {
        Rational total(0);
        std::vector<Rational> combo(static_cast<std::size_t>(seq.dim()), Rational(0));
        for (int label : part) {
            const Rational& w = cert.coefficients[static_cast<std::size_t>(label) - 1];
            CHECK(sgn(w) > 0);
            total += w;
            for (int i = 0; i < seq.dim(); ++i) combo[static_cast<std::size_t>(i)] += w * seq.point(label)[i];
        }
        total.canonicalize();
        CHECK(total == Rational(1));
        for (int i = 0; i < seq.dim(); ++i) {
            Rational c = combo[static_cast<std::size_t>(i)];
            c.canonicalize();
            CHECK(c == cert.tverberg_point[i]);
        }
    }
}

} // namespace

TEST_CASE("radon_partition of four points on the parabola") {
    const RadonResult res = radon_partition(moment_curve_sequence(2, 4));
    CHECK(res.first_part == std::vector<int>{1, 3});
    CHECK(res.second_part == std::vector<int>{2, 4});
    Rational x(5, 2);
    x.canonicalize();
    CHECK(res.radon_point[0] == x);
    CHECK(res.radon_point[1] == Rational(7));
}

TEST_CASE("radon_partition alternates along the moment curve") {
    for (int d = 1; d <= 5; ++d) {
        const RadonResult res = radon_partition(moment_curve_sequence(d, d + 2));
        std::vector<int> odd, even;
        for (int label = 1; label <= d + 2; ++label) {
            (label % 2 == 1 ? odd : even).push_back(label);
        }
        CHECK(res.first_part == odd);
        CHECK(res.second_part == even);
    }
}

TEST_CASE("radon_partition of a point inside a triangle") {
    const RadonResult res = radon_partition(planar4());
    CHECK(res.first_part == std::vector<int>{1, 2, 3});
    CHECK(res.second_part == std::vector<int>{4});
    CHECK(res.radon_point[0] == Rational(1));
    CHECK(res.radon_point[1] == Rational(1));
}

TEST_CASE("radon_partition coefficients are convex weights for both parts") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const int d = 1 + static_cast<int>(seed % 4);
        const PointSequence seq = random_homogeneous_sequence(d, d + 2, seed);
        const RadonResult res = radon_partition(seq);
        for (const auto* part : {&res.first_part, &res.second_part}) {
            Rational total(0);
            std::vector<Rational> combo(static_cast<std::size_t>(d), Rational(0));
            for (int label : *part) {
                const Rational& w = res.coefficients[static_cast<std::size_t>(label) - 1];
                CHECK(sgn(w) > 0);
                total += w;
                for (int i = 0; i < d; ++i) combo[static_cast<std::size_t>(i)] += w * seq.point(label)[i];
            }
            total.canonicalize();
            CHECK(total == Rational(1));
            for (int i = 0; i < d; ++i) {
                Rational c = combo[static_cast<std::size_t>(i)];
                c.canonicalize();
                CHECK(c == res.radon_point[i]);
            }
        }
    }
}

TEST_CASE("radon_partition input validation") {
    CHECK_THROWS_AS(radon_partition(moment_curve_sequence(2, 5)), DimensionError);
    const PointSequence collinear(2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 2}),
                                      make_point({3, 3})});
    CHECK_THROWS_AS(radon_partition(collinear), GenericityError);
}

TEST_CASE("the Radon split is the unique realizable two-split") {
    for (int d = 1; d <= 5; ++d) {
        const PointSequence seq = random_homogeneous_sequence(d, d + 2, 90 + static_cast<std::uint64_t>(d));
        const RadonResult res = radon_partition(seq);
        int hits = 0;
        for (const auto& [first, second] : all_two_splits(d + 2)) {
            const bool meets = pair_hulls_intersect(seq, first, second);
            if (meets) {
                ++hits;
                CHECK(first == res.first_part);
                CHECK(second == res.second_part);
            }
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("point_in_simplex distinguishes inside from outside") {
    const std::vector<ExactPoint> simplex{make_point({0, 0}), make_point({4, 0}), make_point({0, 4})};
    CHECK(point_in_simplex(make_point({1, 1}), simplex));
    CHECK_FALSE(point_in_simplex(make_point({5, 5}), simplex));
    CHECK_FALSE(point_in_simplex(make_point({-1, 1}), simplex));
    CHECK_THROWS_AS(point_in_simplex(make_point({2, 0}), simplex), GenericityError);  // on a facet
    CHECK_THROWS_AS(point_in_simplex(make_point({2, 2}), simplex), GenericityError);  // on the hypotenuse
    const std::vector<ExactPoint> flat{make_point({0, 0}), make_point({1, 1}), make_point({2, 2})};
    CHECK_THROWS_AS(point_in_simplex(make_point({1, 0}), flat), GenericityError);
    CHECK_THROWS_AS(point_in_simplex(make_point({1, 1}), {make_point({0, 0}), make_point({4, 0})}),
                    DimensionError);
}

TEST_CASE("verify_tverberg certifies the realized type of planar4") {
    const PointSequence seq = planar4();
    const auto cert = verify_tverberg(seq, decode("1112", 2, 2));
    REQUIRE(cert.has_value());
    CHECK(cert->tverberg_point[0] == Rational(1));
    CHECK(cert->tverberg_point[1] == Rational(1));
    Rational half(1, 2), quarter(1, 4);
    half.canonicalize();
    quarter.canonicalize();
    CHECK(cert->coefficients == std::vector<Rational>{half, quarter, quarter, Rational(1)});
    check_certificate(seq, *cert);
}

TEST_CASE("verify_tverberg rejects unrealized types") {
    const PointSequence seq = planar4();
    CHECK_FALSE(verify_tverberg(seq, decode("1212", 2, 2)).has_value());
    CHECK_FALSE(verify_tverberg(seq, decode("1122", 2, 2)).has_value());
    CHECK_FALSE(verify_tverberg(seq, decode("1222", 2, 2)).has_value());
}

TEST_CASE("verify_tverberg rejects oversized parts without solving") {
    const PointSequence line = moment_curve_sequence(1, 5);
    CHECK_FALSE(verify_tverberg(line, decode("11123", 1, 3)).has_value());
}

TEST_CASE("verify_tverberg validates dimensions") {
    CHECK_THROWS_AS(verify_tverberg(moment_curve_sequence(2, 5), decode("1112", 2, 2)), DimensionError);
    CHECK_THROWS_AS(verify_tverberg(moment_curve_sequence(3, 4), decode("1112", 2, 2)), DimensionError);
}

TEST_CASE("verify_tverberg reports degeneracy as a genericity error") {
    const PointSequence collinear(2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 2}),
                                      make_point({3, 3})});
    CHECK_THROWS_AS(verify_tverberg(collinear, decode("1212", 2, 2)), GenericityError);
}

TEST_CASE("enumerate_tverberg_partitions finds the single Radon split of planar4") {
    const auto certs = enumerate_tverberg_partitions(planar4(), 2);
    REQUIRE(certs.size() == 1);
    CHECK(encode(certs.front().type) == "1112");
    CHECK(certs.front().tverberg_point[0] == Rational(1));
}

TEST_CASE("enumerate_tverberg_partitions matches the Sierksma count for d = 2, r = 3") {
    const PointSequence seq = sierksma_d2_r3();
    const auto certs = enumerate_tverberg_partitions(seq, 3);
    std::vector<std::string> encodings;
    for (const auto& cert : certs) {
        encodings.push_back(encode(cert.type));
        check_certificate(seq, cert);
    }
    std::sort(encodings.begin(), encodings.end());
    const std::vector<std::string> expected{"1212123", "1212213", "1221123", "1221213"};
    CHECK(encodings == expected);
}

TEST_CASE("enumerate_tverberg_partitions on five collinear points, r = 3") {
    const auto certs = enumerate_tverberg_partitions(moment_curve_sequence(1, 5), 3);
    std::vector<std::string> encodings;
    for (const auto& cert : certs) encodings.push_back(encode(cert.type));
    std::sort(encodings.begin(), encodings.end());
    CHECK(encodings == std::vector<std::string>{"12312", "12321"});
    for (const auto& cert : certs) {
        CHECK(cert.tverberg_point[0] == Rational(3)); // the median point
    }
}

TEST_CASE("enumerate_tverberg_partitions is worker-count invariant") {
    const PointSequence seq = sierksma_d2_r3();
    const auto one = enumerate_tverberg_partitions(seq, 3, 1);
    const auto four = enumerate_tverberg_partitions(seq, 3, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(encode(one[i].type) == encode(four[i].type));
        CHECK(one[i].coefficients == four[i].coefficients);
    }
}

TEST_CASE("enumerate_tverberg_partitions validates the point count") {
    CHECK_THROWS_AS(enumerate_tverberg_partitions(moment_curve_sequence(2, 5), 2), DimensionError);
    CHECK_THROWS_AS(enumerate_tverberg_partitions(moment_curve_sequence(2, 4), 1), PreconditionError);
}

TEST_CASE("central_project maps the moment curve to a homogeneous planar sequence") {
    const PointSequence seq = moment_curve_sequence(3, 6);
    const PointSequence proj = central_project(seq);
    CHECK(proj.dim() == 2);
    CHECK(proj.size() == 5);
    CHECK(proj.generic());
    CHECK(proj.orientation_homogeneous());
}

TEST_CASE("central_project preserves tuple orientations against the center") {
    const PointSequence seq = moment_curve_sequence(3, 6);

    SECTION("center at the first label") {
        const PointSequence proj = central_project(seq);
        for_each_combination(5, 3, [&](const std::vector<int>& idx) {
            std::vector<ExactPoint> chart, original;
            for (int i : idx) {
                chart.push_back(proj.point(i + 1));
                original.push_back(seq.point(i + 2)); // companions are labels 2..6
            }
            original.push_back(seq.point(1));
            CHECK(orientation(chart) == orientation(original));
            return true;
        });
    }

    SECTION("center at the last label") {
        const PointSequence proj = central_project(seq, true);
        for_each_combination(5, 3, [&](const std::vector<int>& idx) {
            std::vector<ExactPoint> chart, original;
            for (int i : idx) {
                chart.push_back(proj.point(i + 1));
                original.push_back(seq.point(i + 1)); // companions are labels 1..5
            }
            original.push_back(seq.point(6));
            CHECK(orientation(chart) == orientation(original));
            return true;
        });
    }
}

TEST_CASE("central_project preserves homogeneity on random sequences") {
    for (std::uint64_t seed = 40; seed < 46; ++seed) {
        const PointSequence seq = random_homogeneous_sequence(3, 7, seed);
        for (bool from_last : {false, true}) {
            const PointSequence proj = central_project(seq, from_last);
            CHECK(proj.dim() == 2);
            CHECK(proj.size() == 6);
            CHECK(proj.orientation_homogeneous());
        }
    }
}

TEST_CASE("central_project input validation") {
    CHECK_THROWS_AS(central_project(moment_curve_sequence(1, 4)), DimensionError);
    CHECK_THROWS_AS(central_project(PointSequence(2, {make_point({0, 0}), make_point({1, 0})})),
                    PreconditionError);
    // A companion behind the center projects away from the cut hyperplane.
    const PointSequence bad(2, {make_point({0, 0}), make_point({1, 0}), make_point({-2, 0})});
    CHECK_THROWS_AS(central_project(bad), GenericityError);
}

TEST_CASE("pair_hulls_intersect on pinned pentagon splits") {
    const PointSequence seq = pentagon();
    CHECK(pair_hulls_intersect(seq, {1, 3, 5}, {2, 4}));
    CHECK_FALSE(pair_hulls_intersect(seq, {1, 2}, {3, 4, 5}));
    CHECK_FALSE(pair_hulls_intersect(seq, {1, 2, 3}, {4, 5}));
    CHECK(pair_hulls_intersect(seq, {1, 3}, {2, 4}));
    CHECK_FALSE(pair_hulls_intersect(seq, {1, 2}, {3, 4}));
}

TEST_CASE("pair_hulls_intersect agrees with radon_partition on subsequences") {
    for (std::uint64_t seed = 60; seed < 66; ++seed) {
        const PointSequence seq = random_homogeneous_sequence(2, 5, seed);
        for_each_combination(5, 4, [&](const std::vector<int>& idx) {
            std::vector<int> labels;
            for (int i : idx) labels.push_back(i + 1);
            const PointSequence sub = seq.subsequence(labels);
            const RadonResult res = radon_partition(sub);
            auto original = [&](const std::vector<int>& local) {
                std::vector<int> out;
                for (int q : local) out.push_back(labels[static_cast<std::size_t>(q) - 1]);
                return out;
            };
            CHECK(pair_hulls_intersect(seq, original(res.first_part), original(res.second_part)));
            return true;
        });
    }
}

TEST_CASE("pair_hulls_intersect validates its label sets") {
    const PointSequence seq = pentagon();
    CHECK_THROWS_AS(pair_hulls_intersect(seq, {1, 2}, {2, 3}), PreconditionError);
    CHECK_THROWS_AS(pair_hulls_intersect(seq, {1, 2, 3, 4, 5}, {}), PreconditionError);
    CHECK_THROWS_AS(pair_hulls_intersect(seq, {1}, {2}), PreconditionError);
}
