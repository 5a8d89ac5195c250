#include "doctest.h"
#include "homcat/matrix.hpp"

#include <random>

using namespace homcat;

namespace {

Matrix random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::uniform_int_distribution<int> val(-max_abs, max_abs);
    int r = dim(rng), c = dim(rng);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = val(rng);
    return m;
}

void check_smith_contract(const Matrix& m) {
    SmithForm s = smith_normal_form(m);
    CAPTURE(m.to_string());
    REQUIRE(s.u * m * s.v == s.d);
    REQUIRE(s.u * s.u_inv == Matrix::identity(m.rows()));
    REQUIRE(s.v * s.v_inv == Matrix::identity(m.cols()));
    // d is diagonal, nonnegative, with a divisibility chain.
    for (int i = 0; i < s.d.rows(); ++i)
        for (int j = 0; j < s.d.cols(); ++j)
            if (i != j) REQUIRE(s.d(i, j) == 0);
    int n = std::min(s.d.rows(), s.d.cols());
    for (int i = 0; i < n; ++i) REQUIRE(s.d(i, i) >= 0);
    for (int i = 0; i + 1 < n; ++i) {
        if (s.d(i, i) == 0) {
            REQUIRE(s.d(i + 1, i + 1) == 0);
        } else {
            REQUIRE(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (i < s.rank)
            REQUIRE(s.d(i, i) != 0);
        else
            REQUIRE(s.d(i, i) == 0);
    }
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    Matrix a(2, 2, {1, 2, 3, 4});
    Matrix b(2, 2, {0, 1, 1, 0});
    CHECK(a * b == Matrix(2, 2, {2, 1, 4, 3}));
    CHECK(a + b == Matrix(2, 2, {1, 3, 4, 4}));
    CHECK(a - a == Matrix::zero(2, 2));
    CHECK((-a) == Matrix(2, 2, {-1, -2, -3, -4}));
    CHECK(a.transpose() == Matrix(2, 2, {1, 3, 2, 4}));
    CHECK(a * Matrix::identity(2) == a);
    CHECK(Matrix::identity(2) * a == a);
}

TEST_CASE("matrix block operations") {
    Matrix a(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(a.columns(1, 3) == Matrix(2, 2, {2, 3, 5, 6}));
    CHECK(a.row_block(1, 2) == Matrix(1, 3, {4, 5, 6}));
    CHECK(a.column(0) == Matrix(2, 1, {1, 4}));
    Matrix b(2, 1, {7, 8});
    CHECK(a.hconcat(b) == Matrix(2, 4, {1, 2, 3, 7, 4, 5, 6, 8}));
    Matrix c(1, 3, {9, 9, 9});
    CHECK(a.vconcat(c) == Matrix(3, 3, {1, 2, 3, 4, 5, 6, 9, 9, 9}));
}

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
    Matrix m(2, 2, {2, 0, 0, 3});
    SmithForm s = smith_normal_form(m);
    CHECK(s.rank == 2);
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
    CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("smith normal form edge cases") {
    check_smith_contract(Matrix(0, 0));
    check_smith_contract(Matrix(0, 3));
    check_smith_contract(Matrix(3, 0));
    check_smith_contract(Matrix::zero(2, 4));
    check_smith_contract(Matrix::identity(3));
    SmithForm z = smith_normal_form(Matrix::zero(2, 4));
    CHECK(z.rank == 0);
}

TEST_CASE("smith normal form randomized contract") {
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 200; ++trial) {
        check_smith_contract(random_matrix(rng, 5, 9));
    }
}

TEST_CASE("integer kernel") {
    // x + y + z = 0 has a rank-2 kernel.
    Matrix m(1, 3, {1, 1, 1});
    Matrix k = integer_kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    // Injective map: trivial kernel.
    Matrix inj(3, 2, {1, 0, 0, 1, 0, 0});
    CHECK(integer_kernel(inj).cols() == 0);

    // Kernel basis is a lattice basis: known element (1,-1,0) must be an
    // integer combination of the basis columns.
    Matrix target(3, 1, {1, -1, 0});
    Matrix coeff;
    CHECK(solve_integer(k, target, coeff));
}

TEST_CASE("integer kernel randomized") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = random_matrix(rng, 5, 6);
        Matrix k = integer_kernel(m);
        CHECK(k.rows() == m.cols());
        if (k.cols() > 0) CHECK((m * k).is_zero());
        SmithForm s = smith_normal_form(m);
        CHECK(k.cols() == m.cols() - s.rank);
    }
}

TEST_CASE("solve_integer") {
    Matrix m(2, 2, {2, 0, 0, 3});
    Matrix b(2, 1, {4, 9});
    Matrix x;
    REQUIRE(solve_integer(m, b, x));
    CHECK(m * x == b);

    Matrix bad(2, 1, {1, 0});
    CHECK_FALSE(solve_integer(m, bad, x));

    // Underdetermined but solvable.
    Matrix wide(1, 3, {2, 3, 5});
    Matrix one(1, 1, {1});
    REQUIRE(solve_integer(wide, one, x));
    CHECK(wide * x == one);

    // Multi-column right-hand side.
    Matrix rhs(2, 2, {2, 6, 3, 0});
    REQUIRE(solve_integer(m, rhs, x));
    CHECK(m * rhs == m * rhs);
    CHECK(m * x == rhs);
}

TEST_CASE("solve_integer randomized consistency") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix m = random_matrix(rng, 4, 5);
        if (m.cols() == 0 || m.rows() == 0) continue;
        // Build a guaranteed-solvable rhs from a random integer point.
        Matrix p(m.cols(), 1);
        for (int i = 0; i < p.rows(); ++i) p(i, 0) = val(rng);
        Matrix b = m * p;
        Matrix x;
        REQUIRE(solve_integer(m, b, x));
        CHECK(m * x == b);
    }
}
