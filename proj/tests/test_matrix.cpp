#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bidend/matrix.hpp"

using namespace bidend;

namespace {

Mat from_rows(const std::vector<std::vector<long>>& rows) {
    Mat m(0, 0);
    for (const auto& r : rows) {
        std::vector<Rational> rr;
        for (long x : r) rr.emplace_back(x);
        m.append_row(std::move(rr));
    }
    return m;
}

}  // namespace

TEST_CASE("bareiss determinant") {
    CHECK(bareiss_det(from_rows({{2, 1}, {1, 1}})) == 1);
    CHECK(bareiss_det(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(bareiss_det(from_rows({{0, 1, 2}, {1, 0, 3}, {4, 5, 6}})) == 16);
    // needs a pivot swap in column 0
    CHECK(bareiss_det(from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("bareiss rank") {
    CHECK(bareiss_rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
    CHECK(bareiss_rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(bareiss_rank(from_rows({{1, 0}, {0, 1}})) == 2);
}

TEST_CASE("rref and kernel") {
    Mat m = from_rows({{1, 2, 3}, {2, 4, 6}});
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 2);
    // echelon shape: leading 1, strictly increasing pivots
    for (const auto& v : ker) {
        std::size_t p = 0;
        while (p < v.size() && is_zero(v[p])) ++p;
        REQUIRE(p < v.size());
        CHECK(v[p] == 1);
    }
    // kernel vectors annihilate the matrix
    for (const auto& v : ker)
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
            CHECK(is_zero(s));
        }
}

TEST_CASE("solve_linear against random systems") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 6;
        Mat a(n, n);
        std::vector<Rational> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = Rational(d(rng));
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rational(d(rng));
        }
        if (is_zero(bareiss_det(a))) continue;
        std::vector<Rational> b(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b[i] += a.at(i, j) * x[j];
        CHECK(solve_linear(a, b) == x);
    }
    CHECK_THROWS_AS(solve_linear(from_rows({{1, 2}, {2, 4}}), {Rational(1), Rational(1)}),
                    std::runtime_error);
}

TEST_CASE("row space utilities") {
    const std::vector<std::vector<Rational>> a = {{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
    const std::vector<std::vector<Rational>> b = {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK(same_row_space(a, b, 2));
    CHECK(in_row_span(row_space_echelon(a, 2), {Rational(5), Rational(-2)}));
    const std::vector<std::vector<Rational>> c = {{Rational(1), Rational(2)}};
    CHECK(!same_row_space(a, c, 2));
    CHECK(!in_row_span(row_space_echelon(c, 2), {Rational(1), Rational(0)}));
}
