#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bidend/forest.hpp"
#include "bidend/series.hpp"

using namespace bidend;

namespace {

Series x_only(int order) {
    Series s(order);
    s[1] = 1;
    return s;
}

}  // namespace

TEST_CASE("series arithmetic") {
    Series a(3, {Rational(1), Rational(2)});
    Series b(3, {Rational(0), Rational(1), Rational(1)});
    CHECK((a + b)[1] == 3);
    CHECK((a * b)[1] == 1);
    CHECK((a * b)[2] == 3);
    CHECK((a * b)[3] == 2);
    const Series q = a / (b + Series(3, {Rational(1)}));
    CHECK((q * (b + Series(3, {Rational(1)})))[2] == a[2]);
    CHECK_THROWS_AS(a / b, std::invalid_argument);  // no unit constant term
    CHECK(a.str() == "1,2,0,0");
}

TEST_CASE("forest counts from one degree-1 decoration are Catalan") {
    const Series r = r_from_d(x_only(12));
    const std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n) CHECK(r[n] == catalan[n]);
    CHECK(r.integral());
}

TEST_CASE("forest counts match brute-force enumeration") {
    // one decoration, orders 0..7
    const Series r = r_from_d(x_only(7));
    for (int n = 1; n <= 7; ++n)
        CHECK(r[n] == static_cast<long>(enumerate_forests(DecorationSet::single_default(), n).size()));

    // profiles with up to three graded slices
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> cnt(0, 2), deg(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<int> counts(4, 0);
        counts[1] = cnt(rng);
        counts[2] = cnt(rng);
        counts[3] = cnt(rng);
        DecorationSet d;
        int label = 0;
        for (int k = 1; k <= 3; ++k)
            for (int i = 0; i < counts[k]; ++i) d.add({"d" + std::to_string(label++), k});
        Series ds(7);
        for (int k = 1; k <= 3; ++k) ds[k] = counts[k];
        const Series r2 = r_from_d(ds);
        for (int n = 1; n <= 6; ++n)
            CHECK(r2[n] == static_cast<long>(enumerate_forests(d, n).size()));
    }
}

TEST_CASE("zero decorations give the empty algebra") {
    const Series r = r_from_d(Series(5));
    for (int n = 1; n <= 5; ++n) CHECK(is_zero(r[n]));
    CHECK(r[0] == 1);
    Series bad(3);
    bad[0] = 1;
    CHECK_THROWS_AS(r_from_d(bad), std::invalid_argument);
}

TEST_CASE("mixed decoration profile at degree 3") {
    Series d(5);
    d[1] = 1;
    d[3] = 1;
    CHECK(r_from_d(d)[3] == 6);
}

TEST_CASE("totally primitive dimensions of the factorial row") {
    Series r(12);
    Rational fact(1);
    for (int n = 1; n <= 12; ++n) {
        fact *= n;
        r[n] = fact;
    }
    const Series p = p_from_r(r);
    const std::vector<long> row = {1, 0, 1, 6, 39, 284, 2305, 20682, 203651, 2186744, 25463925, 319989030};
    for (int n = 1; n <= 12; ++n) CHECK(p[n] == row[n - 1]);
    CHECK(p.integral());
    // defining identity holds exactly at the truncation order
    Series one_plus = r;
    one_plus[0] = 1;
    CHECK(one_plus * one_plus * p == r);
}

TEST_CASE("catalan minus one collapses to a single generator") {
    const Series catalan = r_from_d(x_only(12));
    Series r_plus = catalan;
    r_plus[0] = 0;
    const Series p = p_from_r(r_plus);
    CHECK(p[1] == 1);
    for (int n = 2; n <= 12; ++n) CHECK(is_zero(p[n]));
}

TEST_CASE("p_from_r of zero is zero") {
    const Series p = p_from_r(Series(6));
    for (int n = 0; n <= 6; ++n) CHECK(is_zero(p[n]));
}

TEST_CASE("d_from_r inverts the forest count map") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> c(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Series d(12);
        for (int n = 1; n <= 12; ++n) d[n] = c(rng);
        const Series r = r_from_d(d);
        Series r_plus = r;
        r_plus[0] = 0;
        CHECK(d_from_r(r_plus) == d);
    }
    // same formula as p_from_r
    Series r(6, {Rational(0), Rational(1), Rational(2), Rational(6)});
    CHECK(d_from_r(r) == p_from_r(r));
    CHECK(is_zero(d_from_r(Series(4))[2]));
}
