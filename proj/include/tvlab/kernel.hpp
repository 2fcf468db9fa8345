#ifndef TVLAB_KERNEL_HPP
#define TVLAB_KERNEL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvlab/comb.hpp"
#include "tvlab/errors.hpp"
#include "tvlab/linalg.hpp"
#include "tvlab/rational.hpp"

namespace tvlab {

// A point of R^d with exact rational coordinates.
struct ExactPoint {
    std::vector<Rational> coords;

    ExactPoint() = default;
    explicit ExactPoint(std::vector<Rational> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }

    const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    bool operator==(const ExactPoint& o) const { return coords == o.coords; }
    bool operator!=(const ExactPoint& o) const { return !(*this == o); }
};

inline ExactPoint make_point(std::initializer_list<long> values) {
    std::vector<Rational> c;
    c.reserve(values.size());
    for (long v : values) c.emplace_back(v);
    return ExactPoint(std::move(c));
}

// Point labels: positions are 1-based, printed as 1-9, then A-Z for 10-35,
// then parenthesized decimal.
inline std::string label_string(int label) {
    if (label >= 1 && label <= 9) return std::string(1, static_cast<char>('0' + label));
    if (label >= 10 && label <= 35) return std::string(1, static_cast<char>('A' + label - 10));
    return "(" + std::to_string(label) + ")";
}

// Orientation of d+1 points in R^d: the sign of the (d+1) x (d+1) determinant
// whose top row is all ones and whose remaining rows list the points as
// columns.  Swapping two points flips the sign; a zero means the tuple is
// affinely degenerate.
inline Sign orientation(const std::vector<ExactPoint>& pts) {
    if (pts.empty()) throw DimensionError("orientation of an empty tuple");
    const int d = pts.front().dim();
    if (static_cast<int>(pts.size()) != d + 1) {
        throw DimensionError("orientation requires exactly d+1 points in R^d");
    }
    Matrix m(d + 1, d + 1);
    for (int j = 0; j <= d; ++j) {
        const ExactPoint& p = pts[static_cast<std::size_t>(j)];
        if (p.dim() != d) throw DimensionError("orientation: mixed point dimensions");
        m.at(0, j) = 1;
        for (int i = 0; i < d; ++i) m.at(i + 1, j) = p[i];
    }
    return sign_of(det(m));
}

// An immutable labeled point sequence.  Genericity and orientation
// homogeneity are computed on demand and cached; the cache is shared between
// copies and safe to fill from several threads.
class PointSequence {
public:
    PointSequence(int dim, std::vector<ExactPoint> pts)
        : dim_(dim), pts_(std::move(pts)), cache_(std::make_shared<Cache>()) {
        if (dim_ <= 0) throw DimensionError("point sequence dimension must be positive");
        for (const ExactPoint& p : pts_) {
            if (p.dim() != dim_) throw DimensionError("point of wrong dimension in sequence");
        }
    }

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(pts_.size()); }

    const std::vector<ExactPoint>& points() const { return pts_; }

    // 1-based access, matching the labels used in types and statements.
    const ExactPoint& point(int label) const {
        if (label < 1 || label > size()) {
            throw PreconditionError("point label " + std::to_string(label) + " out of range 1.." +
                                    std::to_string(size()));
        }
        return pts_[static_cast<std::size_t>(label - 1)];
    }

    // Subsequence by ascending 1-based labels.
    PointSequence subsequence(const std::vector<int>& labels) const {
        std::vector<ExactPoint> sub;
        sub.reserve(labels.size());
        for (int label : labels) sub.push_back(point(label));
        return PointSequence(dim_, std::move(sub));
    }

    // True when no d+1 of the points are affinely degenerate.
    bool generic() const {
        std::call_once(cache_->generic_once, [&] { cache_->generic = compute_generic(); });
        return cache_->generic;
    }

    // True when every (d+1)-subsequence has the same nonzero orientation.
    bool orientation_homogeneous() const {
        std::call_once(cache_->homog_once, [&] { compute_homogeneous(); });
        return cache_->homog;
    }

    // The shared orientation sign of an orientation-homogeneous sequence.
    Sign homogeneous_sign() const {
        if (!orientation_homogeneous()) {
            throw PreconditionError("sequence is not orientation-homogeneous");
        }
        return cache_->hsign;
    }

private:
    struct Cache {
        std::once_flag generic_once, homog_once;
        bool generic = false;
        bool homog = false;
        Sign hsign = Sign::zero;
    };

    bool compute_generic() const {
        if (size() < dim_ + 1) return true;
        bool ok = true;
        for_each_combination(size(), dim_ + 1, [&](const std::vector<int>& idx) {
            std::vector<ExactPoint> tuple;
            tuple.reserve(idx.size());
            for (int i : idx) tuple.push_back(pts_[static_cast<std::size_t>(i)]);
            if (orientation(tuple) == Sign::zero) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

    void compute_homogeneous() const {
        if (size() < dim_ + 1) {
            throw PreconditionError("orientation homogeneity needs at least d+1 points");
        }
        bool first = true;
        Sign shared = Sign::zero;
        bool ok = true;
        for_each_combination(size(), dim_ + 1, [&](const std::vector<int>& idx) {
            std::vector<ExactPoint> tuple;
            tuple.reserve(idx.size());
            for (int i : idx) tuple.push_back(pts_[static_cast<std::size_t>(i)]);
            const Sign s = orientation(tuple);
            if (s == Sign::zero) {
                ok = false;
                return false;
            }
            if (first) {
                shared = s;
                first = false;
            } else if (s != shared) {
                ok = false;
                return false;
            }
            return true;
        });
        cache_->homog = ok;
        cache_->hsign = ok ? shared : Sign::zero;
    }

    int dim_;
    std::vector<ExactPoint> pts_;
    std::shared_ptr<Cache> cache_;
};

// Orientation of a labeled (d+1)-tuple drawn from a sequence, in the order
// the labels are listed.
inline Sign orientation(const PointSequence& seq, const std::vector<int>& labels) {
    std::vector<ExactPoint> tuple;
    tuple.reserve(labels.size());
    for (int label : labels) tuple.push_back(seq.point(label));
    return orientation(tuple);
}

// True when no orientation determinant over any (d+1)-subsequence vanishes.
// `arity` is the tuple size of the predicate whose evaluation the check is
// meant to protect: any arity of at least d+1 needs the full check, smaller
// arities involve no orientation polynomial at all.
inline bool is_generic(const PointSequence& seq, int arity) {
    if (arity < seq.dim() + 1) return true;
    return seq.generic();
}

inline bool is_generic(const PointSequence& seq) {
    return seq.generic();
}

inline bool is_orientation_homogeneous(const PointSequence& seq) {
    return seq.orientation_homogeneous();
}

} // namespace tvlab

#endif
