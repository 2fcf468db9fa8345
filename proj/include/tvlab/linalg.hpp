#ifndef TVLAB_LINALG_HPP
#define TVLAB_LINALG_HPP

#include <vector>

#include "tvlab/errors.hpp"
#include "tvlab/rational.hpp"

namespace tvlab {

// Dense matrix of exact rationals, row-major.  Sizes in this library are tiny
// (at most T(d,r) + 1 on a side); clarity wins over cleverness.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows <= 0 || cols <= 0) throw DimensionError("matrix dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[index(i, j)]; }
    const Rational& at(int i, int j) const { return a_[index(i, j)]; }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionError("matrix index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }

    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

using IntRow = std::vector<Int>;

// Clears denominators row by row: each row is multiplied by the lcm of its
// denominators.  Row scaling by positive factors preserves solution sets and
// multiplies the determinant by the product of the factors.
inline std::vector<IntRow> scale_rows_to_integers(const Matrix& m, std::vector<Int>* factors) {
    std::vector<IntRow> rows(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols(); ++j) {
            Int den(m.at(i, j).get_den());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        IntRow row(static_cast<std::size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            Int scaled;
            mpz_divexact(scaled.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            row[static_cast<std::size_t>(j)] = Int(q.get_num()) * scaled;
        }
        rows[static_cast<std::size_t>(i)] = std::move(row);
        if (factors) factors->push_back(lcm);
    }
    return rows;
}

// Bareiss fraction-free forward elimination on the leading n columns of an
// integer matrix with n rows (extra columns ride along, e.g. a right-hand
// side).  Pivoting takes the first row with a nonzero entry, which keeps the
// procedure deterministic; every division below is exact by the Bareiss
// identity, so entries stay integral and single-exponential in size.
//
// Returns false when the leading n x n block is singular.  `sign` receives
// the parity of the row swaps performed.
inline bool bareiss_forward(std::vector<IntRow>& m, int n, int& sign) {
    sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n || (n == 1 && k == 0); ++k) {
        if (k >= n) break;
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != k) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        if (k + 1 >= n) break;
        const IntRow& pk = m[static_cast<std::size_t>(k)];
        const std::size_t cols = pk.size();
        for (int i = k + 1; i < n; ++i) {
            IntRow& ri = m[static_cast<std::size_t>(i)];
            const Int head = ri[static_cast<std::size_t>(k)];
            for (std::size_t j = static_cast<std::size_t>(k) + 1; j < cols; ++j) {
                Int t = ri[j] * pk[static_cast<std::size_t>(k)] - head * pk[j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                ri[j] = std::move(t);
            }
            ri[static_cast<std::size_t>(k)] = 0;
        }
        prev = pk[static_cast<std::size_t>(k)];
    }
    return sgn(m[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1]) != 0;
}

} // namespace detail

// Exact determinant of a square rational matrix via fraction-free elimination.
inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant requires a square matrix");
    const int n = m.rows();
    std::vector<Int> factors;
    auto rows = detail::scale_rows_to_integers(m, &factors);
    int sign = 1;
    Rational result;
    if (!detail::bareiss_forward(rows, n, sign)) {
        result = 0;
    } else {
        // After full elimination the trailing pivot equals the determinant of
        // the scaled, row-permuted matrix.
        result = Rational(rows[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(n) - 1]);
        if (sign < 0) result = -result;
        for (const Int& f : factors) result /= Rational(f);
    }
    result.canonicalize();
    return result;
}

// Solves A x = b exactly.  Throws SingularSystemError when A is singular.
inline std::vector<Rational> solve_linear(const Matrix& a, const std::vector<Rational>& b) {
    if (a.rows() != a.cols()) throw DimensionError("solve_linear requires a square matrix");
    const int n = a.rows();
    if (static_cast<int>(b.size()) != n) throw DimensionError("right-hand side length mismatch");

    Matrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[static_cast<std::size_t>(i)];
    }
    auto rows = detail::scale_rows_to_integers(aug, nullptr);
    int sign = 1;
    if (!detail::bareiss_forward(rows, n, sign)) {
        throw SingularSystemError("singular linear system");
    }
    // Back substitution over the rationals on the integral triangular form.
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
        for (int j = i + 1; j < n; ++j) {
            acc -= Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        }
        acc /= Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
        acc.canonicalize();
        x[static_cast<std::size_t>(i)] = std::move(acc);
    }
    return x;
}

} // namespace tvlab

#endif
