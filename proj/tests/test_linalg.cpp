#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "tvlab/linalg.hpp"
#include "tvlab/rng.hpp"

using namespace tvlab;

namespace {

Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

Matrix random_matrix(RandomEngine& engine, int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const long num = static_cast<long>(rand_between(engine, -9, 9));
            const long den = static_cast<long>(rand_between(engine, 1, 4));
            Rational q(num, den);
            q.canonicalize();
            m.at(i, j) = q;
        }
    }
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            Rational sum(0);
            for (int k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            c.at(i, j) = sum;
        }
    }
    return c;
}

// Independent determinant oracle: cofactor expansion along the first row.
Rational det_cofactor(const Matrix& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    Rational sum(0);
    for (int j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        const Rational term = m.at(0, j) * det_cofactor(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

} // namespace

TEST_CASE("determinant on pinned examples") {
    CHECK(det(from_rows({{Rational(5)}})) == Rational(5));
    CHECK(det(from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}})) == Rational(-2));

    // Vandermonde rows (1, t, t^2) for t = 1, 2, 3 has determinant
    // (2-1)(3-1)(3-2) = 2.
    Matrix v(3, 3);
    for (int i = 0; i < 3; ++i) {
        const Rational t(i + 1);
        v.at(i, 0) = Rational(1);
        v.at(i, 1) = t;
        v.at(i, 2) = t * t;
    }
    CHECK(det(v) == Rational(2));
}

TEST_CASE("determinant rejects non-square input") {
    Matrix m(2, 3);
    CHECK_THROWS_AS(det(m), DimensionError);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    RandomEngine engine = seeded_engine(2024, 1);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + static_cast<int>(rand_below(engine, 5));
        const Matrix m = random_matrix(engine, n);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    RandomEngine engine = seeded_engine(2024, 2);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rand_below(engine, 3));
        const Matrix a = random_matrix(engine, n);
        const Matrix b = random_matrix(engine, n);
        CHECK(det(multiply(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("solve_linear on pinned examples") {
    Matrix identity(3, 3);
    for (int i = 0; i < 3; ++i) identity.at(i, i) = Rational(1);
    const std::vector<Rational> b{Rational(4), Rational(-7), Rational(1, 2)};
    CHECK(solve_linear(identity, b) == b);

    const Matrix diag = from_rows({{Rational(2), Rational(0)}, {Rational(0), Rational(4)}});
    const auto x = solve_linear(diag, {Rational(1), Rational(1)});
    CHECK(x == std::vector<Rational>{Rational(1, 2), Rational(1, 4)});
}

TEST_CASE("solve_linear round-trips a constructed solution") {
    RandomEngine engine = seeded_engine(2024, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a(5, 5);
        do {
            a = random_matrix(engine, 5);
        } while (det(a) == 0);
        std::vector<Rational> x0(5);
        for (auto& v : x0) v = Rational(static_cast<long>(rand_between(engine, -20, 20)), 3L), v.canonicalize();
        std::vector<Rational> b(5, Rational(0));
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) b[static_cast<std::size_t>(i)] += a.at(i, j) * x0[static_cast<std::size_t>(j)];
        }
        CHECK(solve_linear(a, b) == x0);
    }
}

TEST_CASE("solve_linear reports singular systems") {
    const Matrix singular = from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
    CHECK_THROWS_AS(solve_linear(singular, {Rational(1), Rational(1)}), SingularSystemError);
}

TEST_CASE("solve_linear validates shapes") {
    Matrix rect(2, 3);
    CHECK_THROWS_AS(solve_linear(rect, {Rational(1), Rational(1)}), DimensionError);
    Matrix square(2, 2);
    square.at(0, 0) = Rational(1);
    square.at(1, 1) = Rational(1);
    CHECK_THROWS_AS(solve_linear(square, {Rational(1)}), DimensionError);
}
