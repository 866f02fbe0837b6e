#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trimodel/gf.hpp"

#include <random>

using namespace trimodel;

namespace {

Mat from_rows(int p, std::vector<std::vector<int>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c, p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<Scalar>(((rows[i][j] % p) + p) % p);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Mat(0, 0, 2)) == 0);
    CHECK(rank(Mat::identity(2, 2)) == 2);
    CHECK(rank(from_rows(2, {{1, 1}, {1, 1}})) == 1);
    CHECK(rank(from_rows(3, {{1, 2}, {2, 2}})) == 2);
    CHECK(rank(from_rows(3, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve_affine basics") {
    // A = I2, b = (1,0): unique solution.
    auto s = solve_affine(Mat::identity(2, 2), from_rows(2, {{1}, {0}}));
    REQUIRE(s.has_value());
    CHECK(s->particular == from_rows(2, {{1}, {0}}));
    CHECK(s->kernel.empty());

    // A = 0 (2x2), b = (1,0): inconsistent.
    CHECK_FALSE(solve_affine(Mat(2, 2, 2), from_rows(2, {{1}, {0}})).has_value());

    // A = [[1,1]], b = (0): solution 0 with kernel {(1,1)}.
    auto t = solve_affine(from_rows(2, {{1, 1}}), from_rows(2, {{0}}));
    REQUIRE(t.has_value());
    CHECK(t->particular.is_zero());
    REQUIRE(t->kernel.size() == 1);
    CHECK(t->kernel[0] == from_rows(2, {{1}, {1}}));

    CHECK_THROWS_AS(solve_affine(Mat(2, 2, 2), Mat(3, 1, 2)), std::invalid_argument);
}

TEST_CASE("kernel_basis basics") {
    CHECK(kernel_basis(Mat::identity(3, 2)).empty());
    CHECK(kernel_basis(Mat(1, 2, 2)).size() == 2);
    auto k = kernel_basis(from_rows(2, {{1, 1}, {0, 0}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == from_rows(2, {{1}, {1}}));
}

TEST_CASE("enumeration order and budget") {
    VectorEnumerator e0(0, 2, 1 << 20);
    auto v = e0.next();
    REQUIRE(v.has_value());
    CHECK(v->rows == 0);
    CHECK_FALSE(e0.next().has_value());

    VectorEnumerator e(2, 2, 1 << 20);
    std::vector<std::vector<int>> expect = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (auto& row : expect) {
        auto x = e.next();
        REQUIRE(x.has_value());
        CHECK(*x == from_rows(2, {{row[0]}, {row[1]}}));
    }
    CHECK_FALSE(e.next().has_value());

    CHECK_THROWS_AS(VectorEnumerator(40, 2, 1 << 20), BudgetExceeded);
}

TEST_CASE("rank-nullity and solution exactness on random matrices") {
    std::mt19937 rng(42);
    for (int p : {2, 3}) {
        for (int trial = 0; trial < 200; ++trial) {
            int r = static_cast<int>(rng() % 7);
            int c = static_cast<int>(rng() % 7);
            Mat A(r, c, p);
            for (auto& x : A.a) x = static_cast<Scalar>(rng() % p);
            auto ker = kernel_basis(A);
            CHECK(rank(A) + static_cast<int>(ker.size()) == c);
            for (auto& k : ker) CHECK((A * k).is_zero());

            Mat b(r, 1, p);
            for (auto& x : b.a) x = static_cast<Scalar>(rng() % p);
            if (auto s = solve_affine(A, b)) {
                CHECK(A * s->particular == b);
                for (auto& k : s->kernel) CHECK((A * k).is_zero());
            } else {
                // Inconsistency witnessed by rank jump.
                CHECK(rank(A.hstack(b)) == rank(A) + 1);
            }
        }
    }
}

TEST_CASE("left_kernel and right_inverse") {
    Mat A = from_rows(2, {{1, 0}, {1, 0}, {0, 1}});  // 3x2, rank 2
    Mat L = left_kernel(A);
    CHECK(L.rows == 1);
    CHECK((L * A).is_zero());
    CHECK(rank(L) == 1);

    Mat B = from_rows(3, {{1, 2, 0}, {0, 1, 1}});  // full row rank over GF(3)
    auto R = right_inverse(B);
    REQUIRE(R.has_value());
    CHECK((B * *R).is_identity());
}
