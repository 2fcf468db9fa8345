#ifndef TVLAB_PREDICATES_HPP
#define TVLAB_PREDICATES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"
#include "tvlab/parallel.hpp"
#include "tvlab/sequences.hpp"
#include "tvlab/statements.hpp"
#include "tvlab/types.hpp"

// Predicates on fixed-length point sequences, and the machinery asking
// whether a predicate occurs in (some subsequence of) a longer sequence.
// Unavoidability claims are Ramsey statements; the scanner below can only
// falsify them, by exhibiting a sequence that avoids the predicate.

namespace tvlab {

struct Predicate {
    std::string name;
    int dim = 0;
    int arity = 0;
    std::function<bool(const PointSequence&)> test; // on a sequence of exactly `arity` points
};

// A separation statement as a predicate: its distinct labels, in increasing
// order, are identified with the positions 1..k of a k-point subsequence.
inline Predicate statement_predicate(const SeparationStatement& statement, int d) {
    const auto labels = statement_labels(statement);
    std::map<int, int> rank;
    int next = 1;
    for (int l : labels) rank[l] = next++;
    const SeparationStatement canonical = relabel_statement(statement, rank);
    Predicate pred;
    pred.name = "statement " + statement_to_string(statement);
    pred.dim = d;
    pred.arity = static_cast<int>(labels.size());
    pred.test = [canonical](const PointSequence& seq) { return eval_statement(seq, canonical); };
    return pred;
}

inline Predicate statement_predicate(const std::string& text, int d) {
    return statement_predicate(parse_statement(text, d), d);
}

// A Tverberg type as a predicate on T(d,r) points.
inline Predicate tv_type_predicate(const TverbergType& type) {
    Predicate pred;
    pred.name = "tv_type " + encode(type);
    pred.dim = type.d();
    pred.arity = type.size();
    pred.test = [type](const PointSequence& seq) { return verify_tverberg(seq, type).has_value(); };
    return pred;
}

// Four planar points in convex position: none lies in the triangle of the
// other three.
inline Predicate convex_position_predicate() {
    Predicate pred;
    pred.name = "convex-position-4";
    pred.dim = 2;
    pred.arity = 4;
    pred.test = [](const PointSequence& seq) {
        if (seq.size() != 4) throw PreconditionError("convex-position-4 expects exactly 4 points");
        for (int inside = 1; inside <= 4; ++inside) {
            std::vector<ExactPoint> triangle;
            for (int i = 1; i <= 4; ++i) {
                if (i != inside) triangle.push_back(seq.point(i));
            }
            if (point_in_simplex(seq.point(inside), triangle)) return false;
        }
        return true;
    };
    return pred;
}

inline Predicate negation(Predicate p) {
    Predicate out;
    out.name = "not(" + p.name + ")";
    out.dim = p.dim;
    out.arity = p.arity;
    out.test = [inner = std::move(p.test)](const PointSequence& seq) { return !inner(seq); };
    return out;
}

// The six-point predicate: the line through points 1 and 4 separates point 3
// from the crossing point of segments 2-5 and 3-6.
inline bool sixpt_eval(const PointSequence& seq) {
    if (seq.dim() != 2 || seq.size() != 6) {
        throw PreconditionError("sixpt_eval expects exactly six planar points");
    }
    static const SeparationStatement statement = parse_statement("14(3:X[25;36])", 2);
    return eval_statement(seq, statement);
}

inline Predicate sixpt_predicate() {
    Predicate pred = statement_predicate("14(3:X[25;36])", 2);
    pred.name = "sixpt";
    return pred;
}

// First subsequence (in lexicographic index order) on which the predicate
// holds, as 1-based labels; empty when the sequence avoids the predicate.
inline std::optional<std::vector<int>> occurs(const PointSequence& seq, const Predicate& pred) {
    if (pred.dim != seq.dim()) throw DimensionError("predicate dimension does not match the sequence");
    if (pred.arity > seq.size()) return std::nullopt;
    std::optional<std::vector<int>> witness;
    for_each_combination(seq.size(), pred.arity, [&](const std::vector<int>& combo) {
        std::vector<int> labels;
        labels.reserve(combo.size());
        for (int i : combo) labels.push_back(i + 1);
        bool hit;
        try {
            hit = pred.test(seq.subsequence(labels));
        } catch (const GenericityError& e) {
            std::string tuple = "(";
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (i) tuple += ',';
                tuple += std::to_string(labels[i]);
            }
            tuple += ")";
            throw GenericityError("tuple " + tuple + ": " + e.what());
        }
        if (hit) {
            witness = std::move(labels);
            return false;
        }
        return true;
    });
    return witness;
}

struct ScanCounterexample {
    int n = 0;
    int instance = 0;
    std::vector<ExactPoint> points;
};

struct ScanReport {
    std::string predicate;
    std::string family;
    int dim = 0;
    std::uint64_t seed = 0;
    int min_n = 0;
    int max_n = 0;
    int budget = 0;
    std::uint64_t instances_checked = 0;
    std::optional<ScanCounterexample> counterexample;
    bool falsified() const { return counterexample.has_value(); }
};

// Searches the family for sequences avoiding the predicate, lengths
// max(arity, min_n) through max_n, spending at most `budget` instances in
// total.  Stops at the first avoiding sequence; its coordinates are the
// report's payload.  min_n matters for claims that hold only above the
// predicate's own arity: a predicate avoidable on its arity-many points can
// still occur in every longer sequence.
inline ScanReport scan_unavoidability(const Predicate& pred, const SequenceFamily& family, int max_n, int budget,
                                      int workers = 1, int min_n = 0) {
    if (family.dim != pred.dim) throw DimensionError("family dimension does not match the predicate");
    if (budget < 1) throw PreconditionError("scan_unavoidability requires a positive budget");
    const int start = std::max(pred.arity, min_n);
    ScanReport report;
    report.predicate = pred.name;
    report.family = family_kind_name(family.kind);
    report.dim = family.dim;
    report.seed = family.seed;
    report.min_n = start;
    report.max_n = max_n;
    report.budget = budget;
    if (max_n < start) return report;

    const int lengths = max_n - start + 1;
    const int per_length = family_is_deterministic(family) ? 1 : std::max(1, budget / lengths);
    for (int n = start; n <= max_n; ++n) {
        const int instances = std::min<int>(per_length, budget - static_cast<int>(report.instances_checked));
        if (instances <= 0) break;
        std::vector<PointSequence> seqs;
        seqs.reserve(static_cast<std::size_t>(instances));
        for (int i = 0; i < instances; ++i) seqs.push_back(family_instance(family, n, i));
        std::vector<char> avoided(static_cast<std::size_t>(instances), 0);
        parallel_for(static_cast<std::size_t>(instances), workers, [&](std::size_t i) {
            avoided[i] = occurs(seqs[i], pred) ? 0 : 1;
        });
        report.instances_checked += static_cast<std::uint64_t>(instances);
        for (int i = 0; i < instances; ++i) {
            if (avoided[static_cast<std::size_t>(i)]) {
                ScanCounterexample ce;
                ce.n = n;
                ce.instance = i;
                for (int l = 1; l <= seqs[static_cast<std::size_t>(i)].size(); ++l) {
                    ce.points.push_back(seqs[static_cast<std::size_t>(i)].point(l));
                }
                report.counterexample = std::move(ce);
                return report;
            }
        }
    }
    return report;
}

} // namespace tvlab

#endif
