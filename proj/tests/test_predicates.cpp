#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/predicates.hpp"
#include "tvlab/sequences.hpp"
#include "tvlab/statements.hpp"
#include "tvlab/types.hpp"

using namespace tvlab;

namespace {

PointSequence perturbed_hexagon() {
    return PointSequence(2, {make_point({4, 0}), make_point({2, 4}), make_point({-2, 5}),
                             make_point({-4, 0}), make_point({-2, -4}), make_point({3, -4})});
}

PointSequence symmetric_hexagon() {
    return PointSequence(2, {make_point({4, 0}), make_point({2, 4}), make_point({-2, 4}),
                             make_point({-4, 0}), make_point({-2, -4}), make_point({2, -4})});
}

// Triangle 1-2-3 with point 4 inside it and point 5 far to the right, so the
// first combination in lexicographic order fails convex position but a later
// one passes.
PointSequence triangle_with_inner_point() {
    return PointSequence(2, {make_point({0, 0}), make_point({10, 0}), make_point({5, 9}),
                             make_point({5, 3}), make_point({20, 1})});
}

// Independent reference for occurs(): scan all combinations in lexicographic
// order and report the first on which the predicate holds.
std::optional<std::vector<int>> first_witness_oracle(const PointSequence& seq, const Predicate& pred) {
    std::optional<std::vector<int>> witness;
    for_each_combination(seq.size(), pred.arity, [&](const std::vector<int>& combo) {
        std::vector<int> labels;
        for (int i : combo) labels.push_back(i + 1);
        if (pred.test(seq.subsequence(labels))) {
            witness = labels;
            return false;
        }
        return true;
    });
    return witness;
}

} // namespace

TEST_CASE("statement predicate keeps the original text and evaluates the rank relabeling") {
    const Predicate pred = statement_predicate("37(2:9)", 2);
    CHECK(pred.name == "statement 37(2:9)");
    CHECK(pred.dim == 2);
    CHECK(pred.arity == 4);

    // Labels 2,3,7,9 rank to 1,2,3,4, so the predicate is "23(1:4)" on any
    // four-point sequence.
    const SeparationStatement canonical = parse_statement("23(1:4)", 2);
    CHECK(pred.test(moment_curve_sequence(2, 4)) == eval_statement(moment_curve_sequence(2, 4), canonical));
    for (std::uint64_t seed = 40; seed < 52; ++seed) {
        const PointSequence seq = random_homogeneous_sequence(2, 4, seed);
        CHECK(pred.test(seq) == eval_statement(seq, canonical));
    }
}

TEST_CASE("tv_type predicate tests realization of the encoded type") {
    const Predicate pred = tv_type_predicate(decode("1112", 2, 2));
    CHECK(pred.name == "tv_type 1112");
    CHECK(pred.dim == 2);
    CHECK(pred.arity == 4);

    const PointSequence planar4(2, {make_point({0, 0}), make_point({4, 0}),
                                    make_point({0, 4}), make_point({1, 1})});
    CHECK(pred.test(planar4));
    CHECK_FALSE(tv_type_predicate(decode("1212", 2, 2)).test(planar4));

    // On the stretched diagonal the zigzag type is realized but the
    // non-colorful "1212123" is not.
    const PointSequence diag = stretched_diagonal(2, 7);
    CHECK(tv_type_predicate(decode("1232123", 2, 3)).test(diag));
    CHECK_FALSE(tv_type_predicate(decode("1212123", 2, 3)).test(diag));
}

TEST_CASE("convex position predicate") {
    const Predicate pred = convex_position_predicate();
    CHECK(pred.name == "convex-position-4");
    CHECK(pred.dim == 2);
    CHECK(pred.arity == 4);

    const PointSequence square(2, {make_point({0, 0}), make_point({4, 0}),
                                   make_point({4, 4}), make_point({0, 4})});
    CHECK(pred.test(square));

    const PointSequence planar4(2, {make_point({0, 0}), make_point({4, 0}),
                                    make_point({0, 4}), make_point({1, 1})});
    CHECK_FALSE(pred.test(planar4));

    CHECK_THROWS_AS(pred.test(moment_curve_sequence(2, 5)), PreconditionError);
}

TEST_CASE("negation flips the verdict and wraps the name") {
    const Predicate pred = negation(convex_position_predicate());
    CHECK(pred.name == "not(convex-position-4)");
    CHECK(pred.dim == 2);
    CHECK(pred.arity == 4);

    const PointSequence square(2, {make_point({0, 0}), make_point({4, 0}),
                                   make_point({4, 4}), make_point({0, 4})});
    const PointSequence planar4(2, {make_point({0, 0}), make_point({4, 0}),
                                    make_point({0, 4}), make_point({1, 1})});
    CHECK_FALSE(pred.test(square));
    CHECK(pred.test(planar4));
}

TEST_CASE("sixpt predicate basics") {
    const Predicate pred = sixpt_predicate();
    CHECK(pred.name == "sixpt");
    CHECK(pred.dim == 2);
    CHECK(pred.arity == 6);

    // The moment curve satisfies sixpt; a hexagon-like convex ring avoids it,
    // which is exactly why the claim needs seven points.
    CHECK(sixpt_eval(moment_curve_sequence(2, 6)));
    CHECK(pred.test(moment_curve_sequence(2, 6)));
    const PointSequence hex = perturbed_hexagon();
    REQUIRE(hex.generic());
    REQUIRE(hex.orientation_homogeneous());
    CHECK_FALSE(sixpt_eval(hex));
    CHECK_FALSE(pred.test(hex));

    CHECK_THROWS_AS(sixpt_eval(moment_curve_sequence(2, 5)), PreconditionError);
    CHECK_THROWS_AS(sixpt_eval(moment_curve_sequence(3, 6)), PreconditionError);
}

TEST_CASE("sixpt on the symmetric hexagon hits a degenerate term") {
    // The crossing of segments 2-5 and 3-6 is the center, which lies on the
    // line through 1 and 4: the statement has no generic truth value.
    const PointSequence sym = symmetric_hexagon();
    REQUIRE(sym.generic());
    REQUIRE(sym.orientation_homogeneous());
    CHECK_THROWS_AS(sixpt_eval(sym), GenericityError);
}

TEST_CASE("sixpt agrees with its two companion statements") {
    // The three phrasings name the same crossing configuration; on a generic
    // homogeneous six-point sequence they hold or fail together.
    const SeparationStatement s1 = parse_statement("14(3:X[25;36])", 2);
    const SeparationStatement s2 = parse_statement("25(1:X[14;36])", 2);
    const SeparationStatement s3 = parse_statement("36(4:X[14;25])", 2);
    int trues = 0;
    for (std::uint64_t seed = 900; seed < 930; ++seed) {
        const PointSequence seq = random_homogeneous_sequence(2, 6, seed);
        const bool v1 = eval_statement(seq, s1);
        const bool v2 = eval_statement(seq, s2);
        const bool v3 = eval_statement(seq, s3);
        CHECK(v1 == v2);
        CHECK(v2 == v3);
        if (v1) ++trues;
    }
    // Both verdicts occur across the sample.
    CHECK(trues > 0);
    CHECK(trues < 30);
}

TEST_CASE("occurs returns the first witness in lexicographic order") {
    const PointSequence seq = triangle_with_inner_point();
    REQUIRE(seq.generic());
    const Predicate pred = convex_position_predicate();

    const auto witness = occurs(seq, pred);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<int>{1, 2, 3, 5});
    CHECK(*witness == *first_witness_oracle(seq, pred));
    CHECK(pred.test(seq.subsequence(*witness)));

    // The sixpt predicate occurs at the very first window of the moment curve.
    const auto w6 = occurs(moment_curve_sequence(2, 7), sixpt_predicate());
    REQUIRE(w6.has_value());
    CHECK(*w6 == std::vector<int>{1, 2, 3, 4, 5, 6});

    // Random generic sequences: the scanner always matches the oracle.
    for (std::uint64_t seed = 500; seed < 512; ++seed) {
        const PointSequence rnd = random_homogeneous_sequence(2, 7, seed);
        const auto got = occurs(rnd, pred);
        const auto want = first_witness_oracle(rnd, pred);
        CHECK(got == want);
    }
}

TEST_CASE("occurs on the stretched diagonal respects the far-apart census") {
    const PointSequence diag = stretched_diagonal(2, 6);
    // Segments of consecutive diagonal points never cross: the paired type
    // "1122" is avoided while the crossing type "1212" occurs immediately.
    CHECK(occurs(diag, tv_type_predicate(decode("1122", 2, 2))) == std::nullopt);
    const auto w = occurs(diag, tv_type_predicate(decode("1212", 2, 2)));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("occurs edge cases") {
    // Arity above the sequence size: nothing to scan.
    CHECK(occurs(moment_curve_sequence(2, 5), sixpt_predicate()) == std::nullopt);
    // Dimension mismatch is refused outright.
    CHECK_THROWS_AS(occurs(moment_curve_sequence(3, 6), sixpt_predicate()), DimensionError);
}

TEST_CASE("occurs reports the offending tuple on degenerate subsequences") {
    // Points 1,2,3 are collinear, so the very first combination aborts with a
    // genericity error naming the tuple.
    const PointSequence bad(2, {make_point({0, 0}), make_point({1, 1}), make_point({2, 2}),
                                make_point({0, 5}), make_point({3, 1})});
    try {
        occurs(bad, convex_position_predicate());
        FAIL("expected GenericityError");
    } catch (const GenericityError& e) {
        CHECK(std::string(e.what()).starts_with("tuple (1,2,3,4): "));
    }
}

TEST_CASE("scan on a deterministic family checks one instance per length") {
    const SequenceFamily fam{SequenceFamily::Kind::stretched_diagonal, 2, 0};
    // On the diagonal, labels 3 and 4 are on the same side of the hyperplane
    // through 1 and 2 at every window, so the statement is avoided at once...
    const ScanReport avoided = scan_unavoidability(statement_predicate("12(3:4)", 2), fam, 8, 100);
    CHECK(avoided.predicate == "statement 12(3:4)");
    CHECK(avoided.family == "stretched-diagonal");
    CHECK(avoided.dim == 2);
    CHECK(avoided.min_n == 4);
    CHECK(avoided.max_n == 8);
    CHECK(avoided.budget == 100);
    CHECK(avoided.instances_checked == 1);
    REQUIRE(avoided.falsified());
    CHECK(avoided.counterexample->n == 4);
    CHECK(avoided.counterexample->instance == 0);
    CHECK(avoided.counterexample->points.size() == 4);
    // ...and the payload really avoids the predicate.
    const PointSequence ce(2, avoided.counterexample->points);
    CHECK(occurs(ce, statement_predicate("12(3:4)", 2)) == std::nullopt);

    // "13(2:4)" holds on every window (2 is between 1 and 3 in both
    // coordinates), so the scan exhausts one instance per length.
    const ScanReport held = scan_unavoidability(statement_predicate("13(2:4)", 2), fam, 8, 100);
    CHECK_FALSE(held.falsified());
    CHECK(held.instances_checked == 5);
}

TEST_CASE("scan min_n shifts the start length") {
    // The negated zigzag type is avoided by the diagonal at every length: the
    // single window of the 7-point diagonal realizes the type, and so does
    // every 7-window of longer diagonals.
    const SequenceFamily fam{SequenceFamily::Kind::stretched_diagonal, 2, 0};
    const Predicate pred = negation(tv_type_predicate(decode("1232123", 2, 3)));

    const ScanReport low = scan_unavoidability(pred, fam, 9, 100);
    CHECK(low.min_n == 7);
    CHECK(low.instances_checked == 1);
    REQUIRE(low.falsified());
    CHECK(low.counterexample->n == 7);

    const ScanReport high = scan_unavoidability(pred, fam, 9, 100, 1, 8);
    CHECK(high.min_n == 8);
    CHECK(high.instances_checked == 1);
    REQUIRE(high.falsified());
    CHECK(high.counterexample->n == 8);
    CHECK(high.counterexample->points.size() == 8);
}

TEST_CASE("scan on a randomized family spends the budget and supports workers") {
    const SequenceFamily fam{SequenceFamily::Kind::perturbed_convex, 2, 7};
    const ScanReport rep = scan_unavoidability(sixpt_predicate(), fam, 7, 12, 1, 7);
    CHECK(rep.seed == 7);
    CHECK(rep.min_n == 7);
    CHECK(rep.instances_checked == 12);
    CHECK_FALSE(rep.falsified());

    // Budget split across two lengths, still exhausted without a counterexample.
    const ScanReport two = scan_unavoidability(sixpt_predicate(), fam, 8, 12, 1, 7);
    CHECK(two.instances_checked == 12);
    CHECK_FALSE(two.falsified());

    // Worker count never changes the verdict or the accounting.
    for (int workers : {2, 4}) {
        const ScanReport par = scan_unavoidability(sixpt_predicate(), fam, 8, 12, workers, 7);
        CHECK(par.instances_checked == two.instances_checked);
        CHECK(par.falsified() == two.falsified());
    }
    const SequenceFamily diag{SequenceFamily::Kind::stretched_diagonal, 2, 0};
    for (int workers : {1, 3}) {
        const ScanReport par = scan_unavoidability(statement_predicate("12(3:4)", 2), diag, 8, 100, workers);
        REQUIRE(par.falsified());
        CHECK(par.counterexample->n == 4);
        CHECK(par.instances_checked == 1);
    }
}

TEST_CASE("scan input validation") {
    const SequenceFamily fam{SequenceFamily::Kind::stretched_diagonal, 2, 0};
    CHECK_THROWS_AS(scan_unavoidability(sixpt_predicate(), fam, 8, 0), PreconditionError);
    const SequenceFamily fam3{SequenceFamily::Kind::stretched_diagonal, 3, 0};
    CHECK_THROWS_AS(scan_unavoidability(sixpt_predicate(), fam3, 8, 10), DimensionError);

    // max_n below the start length: empty report, nothing checked.
    const ScanReport empty = scan_unavoidability(sixpt_predicate(), fam, 5, 10);
    CHECK(empty.instances_checked == 0);
    CHECK_FALSE(empty.falsified());
}

TEST_CASE("scan supports the six-point claim at its stated threshold") {
    // On six points the predicate is avoidable (the hexagon above); from seven
    // on, no random homogeneous instance avoids it.  A deliberate min_n of 6
    // exhibits the avoidance boundary on the convex family whenever the
    // sampled ring resembles a hexagon; rather than rely on luck we check the
    // perturbed hexagon payload directly and scan from 7 up.
    CHECK(occurs(perturbed_hexagon(), sixpt_predicate()) == std::nullopt);
    const SequenceFamily fam{SequenceFamily::Kind::perturbed_convex, 2, 11};
    const ScanReport rep = scan_unavoidability(sixpt_predicate(), fam, 8, 30, 2, 7);
    CHECK(rep.instances_checked == 30);
    CHECK_FALSE(rep.falsified());
}
