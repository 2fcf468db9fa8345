#ifndef TVLAB_TYPES_HPP
#define TVLAB_TYPES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/errors.hpp"

namespace tvlab {

// Number of points in play for dimension d and number of parts r.
inline int t_param(int d, int r) {
    if (d < 0 || r < 1) throw PreconditionError("t_param requires d >= 0 and r >= 1");
    return (r - 1) * (d + 1) + 1;
}

// A Tverberg type: a partition of the index set {1, ..., T(d,r)} into r
// nonempty parts.  Canonical form everywhere: members of a part ascending,
// parts ordered by minimum element.
class TverbergType {
public:
    TverbergType(int d, int r, std::vector<std::vector<int>> parts) : d_(d), r_(r), parts_(std::move(parts)) {
        const int t = t_param(d, r);
        if (static_cast<int>(parts_.size()) != r) {
            throw PreconditionError("type must have exactly r parts");
        }
        std::vector<int> seen(static_cast<std::size_t>(t) + 1, 0);
        for (auto& part : parts_) {
            if (part.empty()) throw PreconditionError("type parts must be nonempty");
            std::sort(part.begin(), part.end());
            for (int x : part) {
                if (x < 1 || x > t) throw PreconditionError("type contains an index outside 1..T(d,r)");
                if (seen[static_cast<std::size_t>(x)]++) {
                    throw PreconditionError("type parts must be disjoint");
                }
            }
        }
        std::sort(parts_.begin(), parts_.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
        for (int x = 1; x <= t; ++x) {
            if (!seen[static_cast<std::size_t>(x)]) {
                throw PreconditionError("type parts must cover 1..T(d,r)");
            }
        }
    }

    int d() const { return d_; }
    int r() const { return r_; }
    int size() const { return t_param(d_, r_); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }

    // 1-based index of the canonical part containing the given element.
    int part_of(int element) const {
        for (int j = 0; j < r_; ++j) {
            const auto& part = parts_[static_cast<std::size_t>(j)];
            if (std::binary_search(part.begin(), part.end(), element)) return j + 1;
        }
        throw PreconditionError("element outside 1..T(d,r)");
    }

    std::vector<int> part_sizes() const {
        std::vector<int> s;
        s.reserve(parts_.size());
        for (const auto& p : parts_) s.push_back(static_cast<int>(p.size()));
        std::sort(s.begin(), s.end());
        return s;
    }

    bool operator==(const TverbergType& o) const { return d_ == o.d_ && r_ == o.r_ && parts_ == o.parts_; }
    bool operator<(const TverbergType& o) const { return parts_ < o.parts_; }

private:
    int d_, r_;
    std::vector<std::vector<int>> parts_;
};

namespace detail {

inline char part_symbol(int j) {
    if (j >= 1 && j <= 9) return static_cast<char>('0' + j);
    throw PreconditionError("type encodings support at most 9 parts");
}

inline int symbol_part(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    throw ParseError(std::string("invalid type-encoding symbol '") + c + "'");
}

} // namespace detail

// Canonical string encoding: character i is the part of element i, with
// parts renamed so that first occurrences read 1, 2, ..., r left to right.
inline std::string encode(const TverbergType& type) {
    const int t = type.size();
    std::string out(static_cast<std::size_t>(t), '?');
    std::map<int, int> rename; // canonical part index -> symbol by first occurrence
    int next = 1;
    for (int x = 1; x <= t; ++x) {
        const int part = type.part_of(x);
        auto it = rename.find(part);
        if (it == rename.end()) it = rename.emplace(part, next++).first;
        out[static_cast<std::size_t>(x - 1)] = detail::part_symbol(it->second);
    }
    return out;
}

// Decodes a string over the symbols 1..r into a type.  The input may use the
// symbols in any order ("2123321" is accepted); encode(decode(s)) yields the
// canonical relabeling.
inline TverbergType decode(const std::string& text, int d, int r) {
    const int t = t_param(d, r);
    if (static_cast<int>(text.size()) != t) {
        throw ParseError("encoding has length " + std::to_string(text.size()) + ", expected T(d,r) = " +
                         std::to_string(t));
    }
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r));
    for (int i = 0; i < t; ++i) {
        const int sym = detail::symbol_part(text[static_cast<std::size_t>(i)]);
        if (sym > r) throw ParseError("encoding uses symbol beyond r parts: " + text);
        parts[static_cast<std::size_t>(sym - 1)].push_back(i + 1);
    }
    for (const auto& part : parts) {
        if (part.empty()) throw ParseError("encoding is missing a symbol: " + text);
    }
    return TverbergType(d, r, std::move(parts));
}

// Colorful types: index blocks {(r-1)(i-1)+1, ..., (r-1)i+1} for
// i = 1..d+1 (consecutive blocks overlap in one element) each meet every part
// exactly once.
inline bool is_colorful(const TverbergType& type) {
    const int r = type.r();
    const std::string enc = encode(type);
    for (int i = 1; i <= type.d() + 1; ++i) {
        const int lo = (r - 1) * (i - 1) + 1;
        std::set<char> seen;
        for (int x = lo; x <= lo + r - 1; ++x) {
            seen.insert(enc[static_cast<std::size_t>(x - 1)]);
        }
        if (static_cast<int>(seen.size()) != r) return false;
    }
    return true;
}

// All colorful types for (d, r) as sorted canonical encodings.  A canonical
// colorful encoding starts with the block "12...r"; each later block is the
// closing symbol of its predecessor followed by a permutation of the other
// r-1 symbols.  Extending block by block yields each encoding exactly once,
// (r-1)!^d in total.
inline std::vector<std::string> enumerate_colorful(int d, int r) {
    if (d < 1 || r < 2) throw PreconditionError("enumerate_colorful requires d >= 1, r >= 2");
    if (r > 9) throw PreconditionError("type encodings support at most 9 parts");
    std::string base;
    for (int j = 1; j <= r; ++j) base.push_back(detail::part_symbol(j));
    std::vector<std::string> current{base};
    for (int block = 0; block < d; ++block) {
        std::vector<std::string> next;
        next.reserve(current.size() * factorial(r - 1));
        for (const std::string& s : current) {
            std::string rest;
            for (int j = 1; j <= r; ++j) {
                const char c = detail::part_symbol(j);
                if (c != s.back()) rest.push_back(c);
            }
            std::sort(rest.begin(), rest.end());
            do {
                next.push_back(s + rest);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

// The zigzag type: the sweep 1 2 ... r r-1 ... 2 1 2 ... truncated to
// T(d, r) symbols.  It is colorful and mirror-symmetric.
inline TverbergType zigzag(int d, int r) {
    const int t = t_param(d, r);
    if (r < 2) throw PreconditionError("zigzag requires r >= 2");
    std::string enc;
    const int period = 2 * (r - 1);
    for (int pos = 0; pos < t; ++pos) {
        const int phase = pos % period;
        const int sym = phase < r ? phase + 1 : period - phase + 1;
        enc.push_back(detail::part_symbol(sym));
    }
    return decode(enc, d, r);
}

// True when some part contains two consecutive indices a, a+1.
inline bool has_consecutive_pair(const TverbergType& type) {
    const std::string enc = encode(type);
    for (std::size_t i = 0; i + 1 < enc.size(); ++i) {
        if (enc[i] == enc[i + 1]) return true;
    }
    return false;
}

// The mirror image: index i goes to T+1-i, then the result is canonicalized.
inline TverbergType mirror(const TverbergType& type) {
    const int t = type.size();
    std::vector<std::vector<int>> parts;
    parts.reserve(type.parts().size());
    for (const auto& part : type.parts()) {
        std::vector<int> q;
        q.reserve(part.size());
        for (int x : part) q.push_back(t + 1 - x);
        parts.push_back(std::move(q));
    }
    return TverbergType(type.d(), type.r(), std::move(parts));
}

inline std::string mirror_encoding(const std::string& enc, int d, int r) {
    return encode(mirror(decode(enc, d, r)));
}

// Braces notation for a type's partition, e.g. "{1,4,7},{2,6,9},{3,5,8}".
inline std::string parts_notation(const TverbergType& type) {
    std::string out;
    for (std::size_t i = 0; i < type.parts().size(); ++i) {
        if (i > 0) out += ',';
        out += '{';
        const auto& part = type.parts()[i];
        for (std::size_t k = 0; k < part.size(); ++k) {
            if (k > 0) out += ',';
            out += std::to_string(part[k]);
        }
        out += '}';
    }
    return out;
}

// Whether parts a and b interlace: the encoding contains ababa or babab as a
// (not necessarily contiguous) subsequence.  For orientation-homogeneous
// 9-sequences in R^3 with part sizes (3,3,3) this is exactly the criterion
// for the two triangles to intersect.
inline bool interlaces(const std::string& enc, int a, int b) {
    const char ca = detail::part_symbol(a), cb = detail::part_symbol(b);
    auto contains_pattern = [&](char x, char y) {
        const char pattern[5] = {x, y, x, y, x};
        int need = 0;
        for (char c : enc) {
            if (c == pattern[need] && ++need == 5) return true;
        }
        return false;
    };
    return contains_pattern(ca, cb) || contains_pattern(cb, ca);
}

// The size-(3,3,3) census for d = 3, r = 3: how many of the 280 types have
// all three triangle pairs interlacing, how many of those are colorful, how
// many of the rest die by the consecutive-pair criterion, and which survive.
struct Census333 {
    int total = 0;
    int interlacing = 0;
    int colorful = 0;
    int consecutive_filtered = 0;
    int residual = 0;
    std::vector<std::string> interlacing_list;
    std::vector<std::string> residual_list;
};

inline Census333 census_333() {
    Census333 census;
    for_each_set_partition(9, 3, [&](const std::vector<std::vector<int>>& parts0) {
        for (const auto& p : parts0) {
            if (p.size() != 3) return true;
        }
        std::vector<std::vector<int>> parts;
        parts.reserve(3);
        for (const auto& p : parts0) {
            std::vector<int> q;
            for (int x : p) q.push_back(x + 1);
            parts.push_back(std::move(q));
        }
        const TverbergType type(3, 3, std::move(parts));
        const std::string enc = encode(type);
        ++census.total;
        if (interlaces(enc, 1, 2) && interlaces(enc, 1, 3) && interlaces(enc, 2, 3)) {
            ++census.interlacing;
            census.interlacing_list.push_back(enc);
            if (is_colorful(type)) {
                ++census.colorful;
            } else if (has_consecutive_pair(type)) {
                ++census.consecutive_filtered;
            } else {
                ++census.residual;
                census.residual_list.push_back(enc);
            }
        }
        return true;
    });
    std::sort(census.interlacing_list.begin(), census.interlacing_list.end());
    std::sort(census.residual_list.begin(), census.residual_list.end());
    return census;
}

// Derived plane-side predicate strings for d = 3, r = 4: take the colorful
// types with part sizes (3,3,3,4); for each of the four indices in the size-4
// part, drop it, rename the size-4 part to 'x' and the others to a, b, c by
// first occurrence.  Distinct strings, sorted.
inline std::vector<std::string> plane_side_predicates_3334() {
    std::set<std::string> out;
    for (const std::string& enc : enumerate_colorful(3, 4)) {
        int count[5] = {0, 0, 0, 0, 0};
        for (char c : enc) ++count[c - '0'];
        int xsym = 0;
        bool sizes_ok = true;
        for (int j = 1; j <= 4; ++j) {
            if (count[j] == 4) {
                xsym = j;
            } else if (count[j] != 3) {
                sizes_ok = false;
            }
        }
        if (!sizes_ok || xsym == 0) continue;
        const char xc = detail::part_symbol(xsym);
        for (std::size_t drop = 0; drop < enc.size(); ++drop) {
            if (enc[drop] != xc) continue;
            std::string t = enc.substr(0, drop) + enc.substr(drop + 1);
            std::map<char, char> rename{{xc, 'x'}};
            char next = 'a';
            std::string mapped;
            mapped.reserve(t.size());
            for (char c : t) {
                auto it = rename.find(c);
                if (it == rename.end()) it = rename.emplace(c, next++).first;
                mapped.push_back(it->second);
            }
            out.insert(mapped);
        }
    }
    return std::vector<std::string>(out.begin(), out.end());
}

} // namespace tvlab

#endif
