#ifndef TVLAB_STATEMENTS_HPP
#define TVLAB_STATEMENTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tvlab/convex.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/kernel.hpp"

// Hyperplane-separation statements over labelled points of a sequence.
//
// Grammar (one line, flat):  <labels> '(' <terms> ':' <terms> ')'
//   label:  '0'-'9' (values 0-9), 'A'-'Z' (values 10-35), or '(n)' with a
//           decimal index for anything larger;
//   term:   a label, or a Radon term  X[<labels>;<labels>]  naming the point
//           where the hulls of the two label sets cross.
//
// "148(2:7)" says the hyperplane through points 1,4,8 separates point 2 from
// point 7.  An empty side, as in "14(23:)", asserts the named terms all lie
// on one common side.  Label 0 refers to a point prepended to the sequence;
// statements mentioning it are evaluated with every label shifted up by one.

namespace tvlab {

struct RadonTerm {
    std::vector<int> first;
    std::vector<int> second;
    friend bool operator==(const RadonTerm&, const RadonTerm&) = default;
};

using Term = std::variant<int, RadonTerm>;

struct SeparationStatement {
    std::vector<int> hyperplane;
    std::vector<Term> left;
    std::vector<Term> right;
    friend bool operator==(const SeparationStatement&, const SeparationStatement&) = default;
};

namespace statement_detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("statement parse error at position " + std::to_string(pos) + ": " + what);
    }
};

inline bool at_label(const Cursor& c) {
    if (c.done()) return false;
    const char ch = c.peek();
    if (ch >= '0' && ch <= '9') return true;
    if (ch >= 'A' && ch <= 'Z') {
        // 'X' opens a Radon term when a '[' follows.
        return !(ch == 'X' && c.pos + 1 < c.text.size() && c.text[c.pos + 1] == '[');
    }
    if (ch == '(') {
        // A parenthesized numeric label; a '(' followed by anything else
        // opens the sides of the statement.
        std::size_t i = c.pos + 1;
        if (i >= c.text.size() || c.text[i] < '0' || c.text[i] > '9') return false;
        while (i < c.text.size() && c.text[i] >= '0' && c.text[i] <= '9') ++i;
        return i < c.text.size() && c.text[i] == ')';
    }
    return false;
}

inline int parse_label(Cursor& c) {
    const char ch = c.peek();
    if (ch >= '0' && ch <= '9') {
        ++c.pos;
        return ch - '0';
    }
    if (ch >= 'A' && ch <= 'Z') {
        ++c.pos;
        return 10 + (ch - 'A');
    }
    if (ch == '(') {
        ++c.pos;
        int value = 0;
        bool any = false;
        while (!c.done() && c.peek() >= '0' && c.peek() <= '9') {
            value = value * 10 + (c.peek() - '0');
            any = true;
            ++c.pos;
        }
        if (!any || c.done() || c.peek() != ')') c.fail("malformed parenthesized label");
        ++c.pos;
        return value;
    }
    c.fail("expected a label");
}

inline std::vector<int> parse_label_run(Cursor& c) {
    std::vector<int> labels;
    while (at_label(c)) labels.push_back(parse_label(c));
    return labels;
}

inline std::vector<Term> parse_terms(Cursor& c) {
    std::vector<Term> terms;
    while (!c.done()) {
        if (at_label(c)) {
            terms.emplace_back(parse_label(c));
            continue;
        }
        if (c.peek() == 'X' && c.pos + 1 < c.text.size() && c.text[c.pos + 1] == '[') {
            c.pos += 2;
            RadonTerm term;
            term.first = parse_label_run(c);
            if (c.done() || c.peek() != ';') c.fail("expected ';' in Radon term");
            ++c.pos;
            term.second = parse_label_run(c);
            if (c.done() || c.peek() != ']') c.fail("expected ']' closing Radon term");
            ++c.pos;
            terms.emplace_back(std::move(term));
            continue;
        }
        break;
    }
    return terms;
}

inline std::string label_token(int label) {
    if (label < 0) throw PreconditionError("negative point label");
    if (label <= 9) return std::string(1, static_cast<char>('0' + label));
    if (label <= 35) return std::string(1, static_cast<char>('A' + label - 10));
    return "(" + std::to_string(label) + ")";
}

} // namespace statement_detail

inline SeparationStatement parse_statement(const std::string& text, int d) {
    if (d < 1) throw DimensionError("parse_statement requires d >= 1");
    statement_detail::Cursor c{text};
    SeparationStatement s;
    s.hyperplane = statement_detail::parse_label_run(c);
    if (c.done() || c.peek() != '(') c.fail("expected '(' opening the sides");
    ++c.pos;
    s.left = statement_detail::parse_terms(c);
    if (c.done() || c.peek() != ':') c.fail("expected ':' between the sides");
    ++c.pos;
    s.right = statement_detail::parse_terms(c);
    if (c.done() || c.peek() != ')') c.fail("expected ')' closing the statement");
    ++c.pos;
    if (!c.done()) c.fail("trailing characters after the statement");

    if (static_cast<int>(s.hyperplane.size()) != d) {
        throw ParseError("statement hyperplane has " + std::to_string(s.hyperplane.size()) +
                         " labels; dimension " + std::to_string(d) + " requires exactly d");
    }
    std::set<int> hyp(s.hyperplane.begin(), s.hyperplane.end());
    if (hyp.size() != s.hyperplane.size()) throw ParseError("statement hyperplane labels must be distinct");
    if (s.left.empty() && s.right.empty()) throw ParseError("statement names no terms");
    for (const auto* side : {&s.left, &s.right}) {
        for (const Term& term : *side) {
            if (std::holds_alternative<int>(term)) {
                if (hyp.count(std::get<int>(term))) {
                    throw ParseError("point term repeats a hyperplane label");
                }
            } else {
                const auto& rt = std::get<RadonTerm>(term);
                if (rt.first.empty() || rt.second.empty()) {
                    throw ParseError("Radon term has an empty label set");
                }
                std::set<int> seen(rt.first.begin(), rt.first.end());
                for (int l : rt.second) seen.insert(l);
                if (seen.size() != rt.first.size() + rt.second.size()) {
                    throw ParseError("Radon term label sets must be disjoint");
                }
                if (static_cast<int>(seen.size()) != d + 2) {
                    throw ParseError("Radon term must name exactly d+2 points");
                }
            }
        }
    }
    return s;
}

inline std::string statement_to_string(const SeparationStatement& s) {
    std::string out;
    for (int l : s.hyperplane) out += statement_detail::label_token(l);
    out += '(';
    const auto render = [&out](const std::vector<Term>& terms) {
        for (const Term& term : terms) {
            if (std::holds_alternative<int>(term)) {
                out += statement_detail::label_token(std::get<int>(term));
            } else {
                const auto& rt = std::get<RadonTerm>(term);
                out += "X[";
                for (int l : rt.first) out += statement_detail::label_token(l);
                out += ';';
                for (int l : rt.second) out += statement_detail::label_token(l);
                out += ']';
            }
        }
    };
    render(s.left);
    out += ':';
    render(s.right);
    out += ')';
    return out;
}

inline std::set<int> statement_labels(const SeparationStatement& s) {
    std::set<int> labels(s.hyperplane.begin(), s.hyperplane.end());
    for (const auto* side : {&s.left, &s.right}) {
        for (const Term& term : *side) {
            if (std::holds_alternative<int>(term)) {
                labels.insert(std::get<int>(term));
            } else {
                const auto& rt = std::get<RadonTerm>(term);
                labels.insert(rt.first.begin(), rt.first.end());
                labels.insert(rt.second.begin(), rt.second.end());
            }
        }
    }
    return labels;
}

// Renames every label through the given map (which must cover all of them).
inline SeparationStatement relabel_statement(const SeparationStatement& s, const std::map<int, int>& mapping) {
    const auto rename = [&mapping](int label) {
        const auto it = mapping.find(label);
        if (it == mapping.end()) throw PreconditionError("relabel_statement: unmapped label");
        return it->second;
    };
    SeparationStatement out;
    for (int l : s.hyperplane) out.hyperplane.push_back(rename(l));
    const auto rename_terms = [&rename](const std::vector<Term>& terms) {
        std::vector<Term> renamed;
        renamed.reserve(terms.size());
        for (const Term& term : terms) {
            if (std::holds_alternative<int>(term)) {
                renamed.emplace_back(rename(std::get<int>(term)));
            } else {
                const auto& rt = std::get<RadonTerm>(term);
                RadonTerm nt;
                for (int l : rt.first) nt.first.push_back(rename(l));
                for (int l : rt.second) nt.second.push_back(rename(l));
                renamed.emplace_back(std::move(nt));
            }
        }
        return renamed;
    };
    out.left = rename_terms(s.left);
    out.right = rename_terms(s.right);
    return out;
}

namespace statement_detail {

// The point a Radon term names: the unique point where the hulls of the two
// label sets cross.  The sets must actually form the Radon partition of the
// named d+2 points.
inline ExactPoint radon_term_point(const PointSequence& seq, const RadonTerm& term) {
    std::vector<int> combined = term.first;
    combined.insert(combined.end(), term.second.begin(), term.second.end());
    std::sort(combined.begin(), combined.end());
    const PointSequence sub = seq.subsequence(combined);
    const RadonResult result = radon_partition(sub);
    std::set<int> expect_first;
    for (int l : term.first) {
        const auto it = std::lower_bound(combined.begin(), combined.end(), l);
        expect_first.insert(static_cast<int>(it - combined.begin()) + 1);
    }
    std::set<int> got_first(result.first_part.begin(), result.first_part.end());
    std::set<int> got_second(result.second_part.begin(), result.second_part.end());
    if (got_first != expect_first && got_second != expect_first) {
        throw PreconditionError("Radon term names a split that is not the Radon partition");
    }
    return result.radon_point;
}

} // namespace statement_detail

// Truth of a separation statement over a generic, orientation-homogeneous
// sequence: every left term strictly on one side of the hyperplane, every
// right term strictly on the other; with one side empty, all terms on one
// common side.
inline bool eval_statement(const PointSequence& seq, const SeparationStatement& statement) {
    if (static_cast<int>(statement.hyperplane.size()) != seq.dim()) {
        throw DimensionError("statement hyperplane arity does not match the sequence dimension");
    }
    if (!seq.generic()) throw PreconditionError("eval_statement requires a generic sequence");
    if (!seq.orientation_homogeneous()) {
        throw PreconditionError("eval_statement requires an orientation-homogeneous sequence");
    }
    SeparationStatement s = statement;
    const auto labels = statement_labels(s);
    if (labels.count(0)) {
        std::map<int, int> shift;
        for (int l : labels) shift[l] = l + 1;
        s = relabel_statement(s, shift);
    }
    for (int l : statement_labels(s)) {
        if (l < 1 || l > seq.size()) {
            throw PreconditionError("statement label " + std::to_string(l) + " outside the sequence");
        }
    }

    std::vector<ExactPoint> frame;
    frame.reserve(s.hyperplane.size() + 1);
    for (int l : s.hyperplane) frame.push_back(seq.point(l));
    frame.emplace_back();
    const auto side_of = [&](const Term& term) {
        ExactPoint p = std::holds_alternative<int>(term)
                           ? seq.point(std::get<int>(term))
                           : statement_detail::radon_term_point(seq, std::get<RadonTerm>(term));
        frame.back() = std::move(p);
        const Sign sign = orientation(frame);
        if (sign == Sign::zero) {
            throw GenericityError("statement term lies on the statement hyperplane");
        }
        return sign;
    };

    std::optional<Sign> left_sign, right_sign;
    for (const Term& term : s.left) {
        const Sign sign = side_of(term);
        if (left_sign && *left_sign != sign) return false;
        left_sign = sign;
    }
    for (const Term& term : s.right) {
        const Sign sign = side_of(term);
        if (right_sign && *right_sign != sign) return false;
        right_sign = sign;
    }
    if (left_sign && right_sign) return *left_sign == opposite(*right_sign);
    return true; // one side empty: all named terms already share a side
}

enum class SidePrediction { same_side, opposite_side };

// Between-count parity: q and q' land on opposite sides of the hyperplane
// through the labelled points exactly when an odd number of hyperplane labels
// lies strictly between them (on orientation-homogeneous sequences).
inline SidePrediction parity_prediction(const std::vector<int>& hyperplane, int q, int q_prime) {
    std::set<int> hyp(hyperplane.begin(), hyperplane.end());
    if (hyp.size() != hyperplane.size()) {
        throw PreconditionError("parity_prediction: hyperplane labels must be distinct");
    }
    if (hyp.count(q) || hyp.count(q_prime)) {
        throw PreconditionError("parity_prediction: query labels must avoid the hyperplane");
    }
    const int lo = std::min(q, q_prime);
    const int hi = std::max(q, q_prime);
    int between = 0;
    for (int h : hyperplane) {
        if (lo < h && h < hi) ++between;
    }
    return between % 2 == 1 ? SidePrediction::opposite_side : SidePrediction::same_side;
}

} // namespace tvlab

#endif
