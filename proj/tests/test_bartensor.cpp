#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bidend/bartensor.hpp"
#include "bidend/expr.hpp"

using namespace bidend;

namespace {

using Bar = BarTensor<FqsymAlgebra, FqsymAlgebra>;
using BK = Bar::Key;
using BElem = LinComb<BK>;

Perm p(const std::string& s) { return parse_perm(s); }

BK left_only(const std::string& s) { return BK(p(s), std::nullopt); }
BK right_only(const std::string& s) { return BK(std::nullopt, p(s)); }
BK both(const std::string& a, const std::string& b) { return BK(p(a), p(b)); }

}  // namespace

TEST_CASE("case table of the tensor-square half-products") {
    FqsymAlgebra alg;
    Bar bar(alg, alg);

    // a (x) 1 against 1 (x) b: the left half vanishes, the right one glues
    CHECK(bar.prec(left_only("1"), right_only("1")).is_zero());
    CHECK(bar.succ(left_only("1"), right_only("1")) == BElem::basis(both("1", "1")));

    // right-only against right-only stays right-only
    CHECK(bar.prec(right_only("1"), right_only("1")) == BElem::basis(right_only("21")));
    CHECK(bar.succ(right_only("1"), right_only("1")) == BElem::basis(right_only("12")));

    // left-only against left-only stays left-only
    CHECK(bar.prec(left_only("1"), left_only("1")) == BElem::basis(left_only("21")));

    // pure tensors multiply componentwise, full product on the left slot
    const BElem x = bar.prec(both("1", "1"), both("1", "1"));
    BElem expect;
    expect.add_term(both("12", "21"), 1);
    expect.add_term(both("21", "21"), 1);
    CHECK(x == expect);

    // mixed: (1 (x) b1) < (a2 (x) 1) = a2 (x) b1
    CHECK(bar.prec(right_only("1"), left_only("12")) == BElem::basis(both("12", "1")));
    CHECK(bar.succ(right_only("1"), left_only("12")).is_zero());
    // (a1 (x) 1) > (a2 (x) b2) = a1.a2 (x) b2
    const BElem y = bar.succ(left_only("1"), both("1", "1"));
    BElem expect_y;
    expect_y.add_term(both("12", "1"), 1);
    expect_y.add_term(both("21", "1"), 1);
    CHECK(y == expect_y);

    CHECK_THROWS_AS(BK(std::nullopt, std::nullopt), std::invalid_argument);
}

TEST_CASE("unitalized coproducts") {
    FqsymAlgebra alg;
    const FqElem one = parse_perm_expr("1");
    // a single letter is primitive: bar_delta = a (x) 1 + 1 (x) a
    BElem expect;
    expect.add_term(left_only("1"), 1);
    expect.add_term(right_only("1"), 1);
    CHECK(bar_delta(alg, one) == expect);

    const FqElem x = parse_perm_expr("21");
    // bar_delta_pre(21) = 1 (x) 1 + 21 (x) 1
    BElem ep;
    ep.add_term(both("1", "1"), 1);
    ep.add_term(left_only("21"), 1);
    CHECK(bar_delta_pre(alg, x) == ep);
    // bar_delta_suc(21) = 1 (x) 21
    CHECK(bar_delta_suc(alg, x) == BElem::basis(right_only("21")));
    // the two halves assemble the full unitalized coproduct
    CHECK(bar_delta_pre(alg, x) + bar_delta_suc(alg, x) == bar_delta(alg, x));
}

TEST_CASE("the degree-n slice of the tensor square has the right size") {
    FqsymAlgebra alg;
    Bar bar(alg, alg);
    // degree 2: 2 left-only + 2 right-only + 1x1 pure tensors
    CHECK(bar.basis(2).size() == 2 + 2 + 1);
    CHECK(bar.basis(1).size() == 2);
}

TEST_CASE("associator flattening") {
    FqsymAlgebra alg;
    Bar bar(alg, alg);
    BarTensor<Bar, FqsymAlgebra> left(bar, alg);
    using LK = BarTensor<Bar, FqsymAlgebra>::Key;

    // ((a (x) 1) (x) c) -> (a (x) (1 (x) c))
    const LK k1(BK(p("1"), std::nullopt), p("21"));
    const auto r1 = bar_associate<FqsymAlgebra, FqsymAlgebra, FqsymAlgebra>(
        LinComb<LK>::basis(k1));
    REQUIRE(r1.size() == 1);
    const auto& key1 = r1.begin()->first;
    CHECK(key1.left.has_value());
    CHECK(key1.right.has_value());
    CHECK(!key1.right->left.has_value());
    CHECK(key1.right->right == p("21"));

    // ((1 (x) b) (x) 1-slot-missing) -> 1 (x) (b (x) 1)
    const LK k2(BK(std::nullopt, p("12")), std::nullopt);
    const auto r2 = bar_associate<FqsymAlgebra, FqsymAlgebra, FqsymAlgebra>(
        LinComb<LK>::basis(k2));
    REQUIRE(r2.size() == 1);
    const auto& key2 = r2.begin()->first;
    CHECK(!key2.left.has_value());
    REQUIRE(key2.right.has_value());
    CHECK(key2.right->left == p("12"));
    CHECK(!key2.right->right.has_value());
}
