#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bidend/expr.hpp"
#include "bidend/fqsym.hpp"

using namespace bidend;
using namespace bidend::fqsym;

namespace {

Perm p(const std::string& s) { return parse_perm(s); }
FqElem e(const std::string& s) { return parse_perm_expr(s); }

FqTensor tensor_of(std::initializer_list<std::pair<std::string, std::string>> pairs) {
    FqTensor t;
    for (const auto& [a, b] : pairs) t.add_term(TensorKey<Perm>(p(a), p(b)), 1);
    return t;
}

}  // namespace

TEST_CASE("standardization") {
    CHECK(standardize({2, 5, 4}) == p("132"));
    CHECK(standardize({1, 2, 3, 4}) == p("1234"));
    CHECK(standardize({5, 4, 3}) == p("321"));
    CHECK(standardize({}) == Perm());
    CHECK_THROWS_AS(standardize({2, 2}), std::invalid_argument);
}

TEST_CASE("permutation basics") {
    CHECK(p("231").inverse() == p("312"));
    CHECK(p("231").str() == "231");
    CHECK(Perm().str() == "e");
    CHECK(p("[10,2,3,4,5,6,7,8,9,1]").size() == 10);
    CHECK(p("[10,2,3,4,5,6,7,8,9,1]").str() == "[10,2,3,4,5,6,7,8,9,1]");
    CHECK_THROWS_AS(p("122"), ParseError);
    CHECK(enumerate_perms(3).size() == 6);
    CHECK(enumerate_perms(0).size() == 1);
}

TEST_CASE("shuffle product examples") {
    CHECK(product(p("12"), p("123")) ==
          e("12345 + 13245 + 13425 + 13452 + 31245 + 31425 + 31452 + 34125 + 34152 + 34512"));
    CHECK(product(p("1"), p("1")) == e("12 + 21"));
    CHECK(product(p("12"), Perm()) == e("12"));
    CHECK(product(Perm(), p("12")) == e("12"));
}

TEST_CASE("half products split the shuffle by the last letter") {
    CHECK(prec(p("12"), p("123")) == e("13452 + 31452 + 34152 + 34512"));
    CHECK(succ(p("12"), p("123")) == e("12345 + 13245 + 13425 + 31245 + 31425 + 34125"));
    CHECK(prec(p("1"), p("1")) == e("21"));
    CHECK(succ(p("1"), p("1")) == e("12"));
    CHECK_THROWS_AS(prec(p("1"), Perm()), std::domain_error);

    for (int n = 1; n <= 6; ++n)
        for (int m = 1; n + m <= 7; ++m)
            for (const auto& u : enumerate_perms(n))
                for (const auto& v : enumerate_perms(m))
                    CHECK(prec(u, v) + succ(u, v) == product(u, v));
}

TEST_CASE("coproduct examples") {
    CHECK(coproduct(p("12543")) == tensor_of({{"e", "12543"},
                                              {"1", "1432"},
                                              {"12", "321"},
                                              {"123", "21"},
                                              {"1243", "1"},
                                              {"12543", "e"}}));
    CHECK(delta_pre(p("12543")) == tensor_of({{"123", "21"}, {"1243", "1"}}));
    CHECK(delta_suc(p("12543")) == tensor_of({{"1", "1432"}, {"12", "321"}}));
    CHECK(delta_pre(p("12")).is_zero());
    CHECK(delta_suc(p("21")).is_zero());
    CHECK(delta_pre(p("21")) == tensor_of({{"1", "1"}}));

    for (int n = 1; n <= 6; ++n)
        for (const auto& u : enumerate_perms(n))
            CHECK(delta_pre(u) + delta_suc(u) == reduced_coproduct(u));
}

TEST_CASE("explicit iterated-coproduct formulas on the fundamental basis") {
    // the three codendriform composites admit closed cut-range expressions:
    // both sides of each axiom equal a sum over pairs of cut points i < j
    // constrained by the position of the maximal letter
    for (int n = 2; n <= 5; ++n)
        for (const auto& u : enumerate_perms(n)) {
            const auto& w = u.word();
            const int maxpos =
                static_cast<int>(std::find(w.begin(), w.end(), n) - w.begin()) + 1;
            auto slice = [&](int from, int to) {
                return standardize(std::vector<int>(w.begin() + from, w.begin() + to));
            };
            FqTensor left_left, middle, right_right;
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    TensorKey<Perm> key({slice(0, i), slice(i, j), slice(j, n)});
                    if (maxpos <= i) left_left.add_term(key, 1);
                    if (i < maxpos && maxpos <= j) middle.add_term(key, 1);
                    if (j < maxpos) right_right.add_term(key, 1);
                }
            const FqTensor dp = delta_pre(u);
            const FqTensor ds = delta_suc(u);
            auto expand_l = [](const FqTensor& t, int which) {
                return expand_factor(t, 0, [which](const Perm& q) {
                    return which == 0 ? delta_pre(q) : delta_suc(q);
                });
            };
            auto expand_r = [](const FqTensor& t, int which) {
                return expand_factor(t, 1, [which](const Perm& q) {
                    return which == 0 ? delta_pre(q) : which == 1 ? delta_suc(q) : reduced_coproduct(q);
                });
            };
            CHECK(expand_l(dp, 0) == left_left);
            CHECK(expand_r(dp, 2) == left_left);
            CHECK(expand_l(dp, 1) == middle);
            CHECK(expand_r(ds, 0) == middle);
            CHECK(expand_l(ds, 0) + expand_l(ds, 1) == right_right);
            CHECK(expand_r(ds, 1) == right_right);
        }
}

TEST_CASE("degree additivity") {
    for (const auto& u : enumerate_perms(2))
        for (const auto& v : enumerate_perms(3))
            for (const auto& [k, c] : product(u, v)) CHECK(k.degree() == 5);
    for (const auto& u : enumerate_perms(5))
        for (const auto& [k, c] : reduced_coproduct(u))
            CHECK(k.factors[0].degree() + k.factors[1].degree() == 5);
}

TEST_CASE("duality pairing") {
    CHECK(dual_pairing(p("231"), p("312")) == 1);
    CHECK(dual_pairing(p("231"), p("231")) == 0);
    CHECK(dual_pairing(p("21"), p("21")) == 1);
    CHECK(dual_pairing(p("12"), p("123")) == 0);
}

TEST_CASE("half-coproducts are adjoint to half-products under duality") {
    // the pairing transports < and > into the left and right coproducts
    for (int total = 2; total <= 5; ++total)
        for (int nu = 1; nu < total; ++nu)
            for (const auto& u : enumerate_perms(nu))
                for (const auto& v : enumerate_perms(total - nu)) {
                    const FqElem uv_pre = prec(u, v);
                    const FqElem uv_suc = succ(u, v);
                    const FqTensor uxv = lc_tensor(FqElem::basis(u), FqElem::basis(v));
                    for (const auto& w : enumerate_perms(total)) {
                        CHECK(dual_pairing(uv_pre, FqElem::basis(w)) ==
                              dual_pairing_tensor(uxv, delta_pre(w)));
                        CHECK(dual_pairing(uv_suc, FqElem::basis(w)) ==
                              dual_pairing_tensor(uxv, delta_suc(w)));
                    }
                }
}
