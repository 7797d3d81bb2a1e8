#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bidend/expr.hpp"
#include "bidend/fqsym.hpp"
#include "bidend/lincomb.hpp"
#include "bidend/rational.hpp"

using namespace bidend;

namespace {

// a tiny opaque key for exercising the linear-combination layer
struct TestKey {
    int id = 0;
    int deg = 1;
    int degree() const { return deg; }
    std::string str() const { return "k" + std::to_string(id); }
    bool operator==(const TestKey& o) const { return id == o.id; }
    bool operator<(const TestKey& o) const { return id < o.id; }
};

using TL = LinComb<TestKey>;

TL random_lc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), key(1, 6), num(-3, 3);
    TL x;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) x.add_term(TestKey{key(rng), 1}, Rational(num(rng)));
    return x;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    const Rational a = rat_parse("2/4");
    CHECK(rat_str(a) == "1/2");
    CHECK(a.get_den() == 2);
    const Rational b = rat_parse("1/3");
    // recompute a sum two ways; exact arithmetic must agree bit for bit
    const Rational s1 = a + b;
    const Rational s2 = rat_parse("5/6");
    CHECK(s1 == s2);
    CHECK(rat_str(s1) == "5/6");
    CHECK(rat_str(make_rational(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(is_zero(Rational(0)));
    CHECK(rat_str(Rational(0)) == "0");
    CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("lc_add examples") {
    TL x = TL::basis(TestKey{1, 1}, 2);
    TL y = TL::basis(TestKey{1, 1}, 3);
    CHECK((x + y).coeff(TestKey{1, 1}) == 5);

    TL a = TL::basis(TestKey{1, 1}, 1);
    TL b = TL::basis(TestKey{1, 1}, -1);
    CHECK((a + b).is_zero());
    CHECK((a + b).str() == "0");

    TL c = TL::basis(TestKey{1, 1}, rat_parse("1/2")) + TL::basis(TestKey{2, 1}, rat_parse("1/3"));
    CHECK(c.size() == 2);
    CHECK(c.str() == "1/2*k1 + 1/3*k2");
}

TEST_CASE("lc_scale examples") {
    TL x = TL::basis(TestKey{1, 1}, 5);
    CHECK(x.scaled(Rational(0)).is_zero());
    CHECK(x.scaled(Rational(1)) == x);
    TL y = TL::basis(TestKey{1, 1}, 3);
    CHECK(y.scaled(rat_parse("-2/3")) == TL::basis(TestKey{1, 1}, -2));
}

TEST_CASE("lc_tensor examples") {
    TL x = TL::basis(TestKey{1, 1}, 2);
    TL y = TL::basis(TestKey{2, 1}, 3);
    auto t = lc_tensor(x, y);
    CHECK(t.size() == 1);
    CHECK(t.coeff(TensorKey<TestKey>(TestKey{1, 1}, TestKey{2, 1})) == 6);
    CHECK(lc_tensor(TL{}, y).is_zero());
    auto sum = lc_tensor(TL::basis(TestKey{1, 1}) + TL::basis(TestKey{2, 1}), TL::basis(TestKey{3, 1}));
    CHECK(sum.size() == 2);
}

TEST_CASE("lc_apply examples and domain error") {
    std::function<std::optional<TL>(const TestKey&)> identity = [](const TestKey& k) {
        return TL::basis(k);
    };
    TL x = TL::basis(TestKey{1, 1}, 3) + TL::basis(TestKey{2, 1}, -1);
    CHECK(lc_apply(identity, x) == x);

    std::function<std::optional<TL>(const TestKey&)> zero = [](const TestKey&) { return TL{}; };
    CHECK(lc_apply(zero, x).is_zero());

    std::function<std::optional<TL>(const TestKey&)> relabel = [](const TestKey& k) {
        if (k.id != 1) return std::optional<TL>{};
        return std::optional<TL>(TL::basis(TestKey{2, 1}));
    };
    CHECK(lc_apply(relabel, TL::basis(TestKey{1, 1}, 3)) == TL::basis(TestKey{2, 1}, 3));
    CHECK_THROWS_AS(lc_apply(relabel, x), std::domain_error);
}

TEST_CASE("linear-combination laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const TL x = random_lc(rng), y = random_lc(rng), z = random_lc(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        const Rational c = Rational(std::uniform_int_distribution<int>(-4, 4)(rng));
        CHECK((x + y).scaled(c) == x.scaled(c) + y.scaled(c));
        CHECK(lc_tensor(x + y, z) == lc_tensor(x, z) + lc_tensor(y, z));
        CHECK(lc_tensor(z, x + y) == lc_tensor(z, x) + lc_tensor(z, y));
        // no zero coefficients survive any operation
        for (const auto& [k, v] : (x + y) - y) CHECK(!is_zero(v));
    }
}

TEST_CASE("tensor keys order and print") {
    TensorKey<TestKey> t(TestKey{1, 2}, TestKey{2, 3});
    CHECK(t.degree() == 5);
    CHECK(t.str() == "k1 # k2");
    LinComb<TensorKey<TestKey>> lt;
    lt.add_term(t, 1);
    CHECK(lt.str() == "1*(k1 # k2)");
}

TEST_CASE("expression parser round-trips rendered combinations") {
    const FqElem e = parse_perm_expr("1243 - 1342 - 2143 + 3241");
    CHECK(e.size() == 4);
    CHECK(e.coeff(parse_perm("1243")) == 1);
    CHECK(e.coeff(parse_perm("2143")) == -1);
    CHECK(parse_perm_expr(e.str()) == e);

    const FqElem f = parse_perm_expr("2*12 + 1/2*21");
    CHECK(f.coeff(parse_perm("12")) == 2);
    CHECK(f.coeff(parse_perm("21")) == rat_parse("1/2"));

    const ForestElem g = parse_forest_expr("2**[*] - (* *)");
    CHECK(g.coeff(parse_forest("*[*]")) == 2);
    CHECK(g.coeff(parse_forest("* *")) == -1);
    CHECK(parse_forest_expr(g.str()) == g);

    CHECK_THROWS_AS(parse_perm_expr(""), ParseError);
    CHECK_THROWS_AS(parse_perm_expr("12 +"), ParseError);
    CHECK_THROWS_AS(parse_perm_expr("11"), ParseError);
}
