#include "bidend/laws.hpp"

#include <functional>
#include <memory>

#include "bidend/pairing.hpp"

namespace bidend {

namespace {

using P = LawOpKind;

OpSeq ops(std::initializer_list<LawOp> l) { return OpSeq(l); }

Law law(std::string id, int arity, std::vector<std::pair<int, OpSeq>> lhs,
        std::vector<std::pair<int, OpSeq>> rhs) {
    Law l;
    l.id = std::move(id);
    l.arity = arity;
    l.lhs.terms = std::move(lhs);
    l.rhs.terms = std::move(rhs);
    return l;
}

}  // namespace

std::vector<Law> dendriform_laws() {
    return {
        // (a<b)<c = a<(bc)
        law("dendriform-left", 3, {{1, ops({{P::ProdPrec, 0}, {P::ProdPrec, 0}})}},
            {{1, ops({{P::ProdFull, 1}, {P::ProdPrec, 0}})}}),
        // (a>b)<c = a>(b<c)
        law("dendriform-middle", 3, {{1, ops({{P::ProdSucc, 0}, {P::ProdPrec, 0}})}},
            {{1, ops({{P::ProdPrec, 1}, {P::ProdSucc, 0}})}}),
        // (ab)>c = a>(b>c)
        law("dendriform-right", 3, {{1, ops({{P::ProdFull, 0}, {P::ProdSucc, 0}})}},
            {{1, ops({{P::ProdSucc, 1}, {P::ProdSucc, 0}})}}),
    };
}

std::vector<Law> codendriform_laws() {
    return {
        // (copl (x) id) copl = (id (x) cop~) copl
        law("codendriform-left", 1, {{1, ops({{P::CopPrec, 0}, {P::CopPrec, 0}})}},
            {{1, ops({{P::CopPrec, 0}, {P::CopFull, 1}})}}),
        // (copr (x) id) copl = (id (x) copl) copr
        law("codendriform-middle", 1, {{1, ops({{P::CopPrec, 0}, {P::CopSucc, 0}})}},
            {{1, ops({{P::CopSucc, 0}, {P::CopPrec, 1}})}}),
        // (cop~ (x) id) copr = (id (x) copr) copr
        law("codendriform-right", 1, {{1, ops({{P::CopSucc, 0}, {P::CopFull, 0}})}},
            {{1, ops({{P::CopSucc, 0}, {P::CopSucc, 1}})}}),
    };
}

std::vector<Law> dend_bialgebra_laws() {
    return {
        // cop~(a<b) = a'b' (x) a''<b'' + a' (x) a''<b + a'b (x) a'' + b' (x) a<b'' + b (x) a
        law("cop-of-prec", 2, {{1, ops({{P::ProdPrec, 0}, {P::CopFull, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopFull, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::CopFull, 0}, {P::Swap, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopFull, 1}, {P::Swap, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::Swap, 0}})}}),
        // cop~(a>b) = a'b' (x) a''>b'' + a' (x) a''>b + ab' (x) b'' + b' (x) a>b'' + a (x) b
        law("cop-of-succ", 2, {{1, ops({{P::ProdSucc, 0}, {P::CopFull, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopFull, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopFull, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopFull, 1}, {P::Swap, 0}, {P::ProdSucc, 1}})},
             {1, ops({})}}),
    };
}

std::vector<Law> codend_bialgebra_laws() {
    return {
        // copr(ab) = a'b'_> (x) a''b''_> + a' (x) a''b + ab'_> (x) b''_> + b'_> (x) ab''_> + a (x) b
        law("copr-of-mul", 2, {{1, ops({{P::ProdFull, 0}, {P::CopSucc, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopSucc, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::CopSucc, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopSucc, 1}, {P::Swap, 0}, {P::ProdFull, 1}})},
             {1, ops({})}}),
        // copl(ab) = a'b'_< (x) a''b''_< + a'b (x) a'' + ab'_< (x) b''_< + b'_< (x) ab''_< + b (x) a
        law("copl-of-mul", 2, {{1, ops({{P::ProdFull, 0}, {P::CopPrec, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopPrec, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::CopFull, 0}, {P::Swap, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopPrec, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopPrec, 1}, {P::Swap, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::Swap, 0}})}}),
        // cop~(ab), the sum of the previous two
        law("cop-of-mul", 2, {{1, ops({{P::ProdFull, 0}, {P::CopFull, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopFull, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdFull, 1}})},
             {1, ops({{P::CopFull, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopFull, 0}, {P::Swap, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopFull, 1}, {P::Swap, 0}, {P::ProdFull, 1}})},
             {1, ops({})},
             {1, ops({{P::Swap, 0}})}}),
    };
}

std::vector<Law> bidendriform_laws() {
    return {
        // copr(a>b) = a'b'_> (x) a''>b''_> + a' (x) a''>b + b'_> (x) a>b''_> + ab'_> (x) b''_> + a (x) b
        law("copr-of-succ", 2, {{1, ops({{P::ProdSucc, 0}, {P::CopSucc, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopSucc, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopSucc, 1}, {P::Swap, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopSucc, 1}, {P::ProdFull, 0}})},
             {1, ops({})}}),
        // copr(a<b) = a'b'_> (x) a''<b''_> + a' (x) a''<b + b'_> (x) a<b''_>
        law("copr-of-prec", 2, {{1, ops({{P::ProdPrec, 0}, {P::CopSucc, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopSucc, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::CopFull, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::CopSucc, 1}, {P::Swap, 0}, {P::ProdPrec, 1}})}}),
        // copl(a>b) = a'b'_< (x) a''>b''_< + ab'_< (x) b''_< + b'_< (x) a>b''_<
        law("copl-of-succ", 2, {{1, ops({{P::ProdSucc, 0}, {P::CopPrec, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopPrec, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdSucc, 1}})},
             {1, ops({{P::CopPrec, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopPrec, 1}, {P::Swap, 0}, {P::ProdSucc, 1}})}}),
        // copl(a<b) = a'b'_< (x) a''<b''_< + a'b (x) a'' + b'_< (x) a<b''_< + b (x) a
        law("copl-of-prec", 2, {{1, ops({{P::ProdPrec, 0}, {P::CopPrec, 0}})}},
            {{1, ops({{P::CopFull, 0}, {P::CopPrec, 2}, {P::Swap, 1}, {P::ProdFull, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::CopFull, 0}, {P::Swap, 1}, {P::ProdFull, 0}})},
             {1, ops({{P::CopPrec, 1}, {P::Swap, 0}, {P::ProdPrec, 1}})},
             {1, ops({{P::Swap, 0}})}}),
    };
}

namespace {

// tuple generator shared by the non-DSL suites
template <typename K>
void degree_tuples(const std::vector<std::vector<K>>& basis, int arity, int bound,
                   const std::function<void(const std::vector<K>&)>& emit) {
    std::vector<K> cur;
    struct Rec {
        int arity, bound;
        const std::vector<std::vector<K>>& basis;
        const std::function<void(const std::vector<K>&)>& emit;
        std::vector<K>& cur;
        void go(int i, int used) {
            if (i == arity) {
                emit(cur);
                return;
            }
            for (int d = 1; used + d + (arity - 1 - i) <= bound; ++d)
                for (const auto& k : basis[d]) {
                    cur.push_back(k);
                    go(i + 1, used + d);
                    cur.pop_back();
                }
        }
    } rec{arity, bound, basis, emit, cur};
    rec.go(0, 0);
}

template <typename A>
LawReport module_axioms_impl(const A& alg, const SuiteConfig& cfg) {
    using K = typename A::Key;
    using Bar = BarTensor<A, A>;
    using BK = typename Bar::Key;
    using BElem = LinComb<BK>;

    LawReport rep;
    rep.suite = "module";
    rep.algebra = alg.name();
    Bar bar(alg, alg);

    // the algebra acting on itself: the module axioms are the dendriform
    // axioms with (left action, right action) = (<, >)
    {
        LawEngine<A> engine(alg);
        std::vector<std::vector<K>> basis(cfg.max_degree + 1);
        for (int d = 1; d <= cfg.max_degree; ++d) basis[d] = alg.basis(d);
        for (const Law& l : dendriform_laws()) {
            Law renamed = l;
            renamed.id = "module-self-" + l.id.substr(std::string("dendriform-").size());
            degree_tuples<K>(basis, 3, cfg.exhaustive_to, [&](const std::vector<K>& tup) {
                ++rep.instances;
                auto fail = engine.check(renamed, tup);
                if (fail) rep.failures.push_back(*fail);
            });
        }
    }

    // the action on A (bar-x) A through the unitalized coproduct
    auto act = [&](const LinComb<K>& x, const BElem& m, bool left) {
        const BElem dx = bar_delta(alg, x);
        return left ? alg_prec(bar, dx, m) : alg_succ(bar, dx, m);
    };
    std::vector<std::vector<K>> basis(cfg.max_degree + 1);
    for (int d = 1; d <= cfg.max_degree; ++d) basis[d] = alg.basis(d);
    std::vector<std::vector<BK>> bar_basis(cfg.max_degree + 1);
    for (int d = 1; d <= cfg.max_degree; ++d) bar_basis[d] = bar.basis(d);

    auto record = [&](const std::string& id, const std::string& inputs, const BElem& lhs,
                      const BElem& rhs) {
        ++rep.instances;
        if (lhs != rhs) rep.failures.push_back({id, inputs, lhs.str(), rhs.str()});
    };

    for (int da = 1; da + 2 <= cfg.exhaustive_to; ++da)
        for (int db = 1; da + db + 1 <= cfg.exhaustive_to; ++db)
            for (int dm = 1; da + db + dm <= cfg.exhaustive_to; ++dm)
                for (const auto& a : basis[da])
                    for (const auto& b : basis[db])
                        for (const auto& mk : bar_basis[dm]) {
                            const auto ea = LinComb<K>::basis(a);
                            const auto eb = LinComb<K>::basis(b);
                            const BElem m = BElem::basis(mk);
                            const std::string in = a.str() + " ; " + b.str() + " ; " + mk.str();
                            record("module-bar-left", in, act(alg_prec(alg, ea, eb), m, true),
                                   act(ea, act(eb, m, true) + act(eb, m, false), true));
                            record("module-bar-middle", in, act(alg_succ(alg, ea, eb), m, true),
                                   act(ea, act(eb, m, true), false));
                            record("module-bar-right", in, act(alg_mul(alg, ea, eb), m, false),
                                   act(ea, act(eb, m, false), false));
                        }

    // the unitalized half-coproducts are module morphisms, and the
    // unitalized coproduct is multiplicative
    for (int da = 1; da + 1 <= cfg.exhaustive_to; ++da)
        for (int db = 1; da + db <= cfg.exhaustive_to; ++db)
            for (const auto& a : basis[da])
                for (const auto& b : basis[db]) {
                    const auto ea = LinComb<K>::basis(a);
                    const auto eb = LinComb<K>::basis(b);
                    const std::string in = a.str() + " ; " + b.str();
                    record("barcopl-module-map-prec", in, bar_delta_pre(alg, alg_prec(alg, ea, eb)),
                           alg_prec(bar, bar_delta(alg, ea), bar_delta_pre(alg, eb)));
                    record("barcopl-module-map-succ", in, bar_delta_pre(alg, alg_succ(alg, ea, eb)),
                           alg_succ(bar, bar_delta(alg, ea), bar_delta_pre(alg, eb)));
                    record("barcopr-module-map-prec", in, bar_delta_suc(alg, alg_prec(alg, ea, eb)),
                           alg_prec(bar, bar_delta(alg, ea), bar_delta_suc(alg, eb)));
                    record("barcopr-module-map-succ", in, bar_delta_suc(alg, alg_succ(alg, ea, eb)),
                           alg_succ(bar, bar_delta(alg, ea), bar_delta_suc(alg, eb)));
                    record("barcop-multiplicative", in, bar_delta(alg, alg_mul(alg, ea, eb)),
                           alg_mul(bar, bar_delta(alg, ea), bar_delta(alg, eb)));
                }
    return rep;
}

template <typename A>
LawReport tensor_suite_impl(const A& alg, const SuiteConfig& cfg) {
    using Bar = BarTensor<A, A>;
    Bar bar(alg, alg);
    SuiteConfig sub = cfg;
    // bar basis grows quadratically; keep the random band tame
    LawReport rep = run_laws(bar, "tensor", dendriform_laws(), sub);
    rep.algebra = alg.name();

    // associator: (A bar A) bar A -> A bar (A bar A) intertwines both
    // half-products on basis samples
    using Bar2L = BarTensor<Bar, A>;
    using Bar2R = BarTensor<A, Bar>;
    Bar2L left(bar, alg);
    Bar2R right(alg, bar);
    const int bound = std::min(cfg.exhaustive_to, 4);
    std::vector<typename Bar2L::Key> keys;
    for (int d = 1; d <= bound - 1; ++d)
        for (const auto& k : left.basis(d)) keys.push_back(k);
    auto assoc = [&](const LinComb<typename Bar2L::Key>& x) { return bar_associate<A, A, A>(x); };
    for (const auto& x : keys)
        for (const auto& y : keys) {
            if (x.degree() + y.degree() > bound) continue;
            const auto ex = LinComb<typename Bar2L::Key>::basis(x);
            const auto ey = LinComb<typename Bar2L::Key>::basis(y);
            const std::string in = x.str() + " ; " + y.str();
            ++rep.instances;
            if (assoc(alg_prec(left, ex, ey)) != alg_prec(right, assoc(ex), assoc(ey)))
                rep.failures.push_back({"tensor-associator-prec", in, "", ""});
            ++rep.instances;
            if (assoc(alg_succ(left, ex, ey)) != alg_succ(right, assoc(ex), assoc(ey)))
                rep.failures.push_back({"tensor-associator-succ", in, "", ""});
        }
    return rep;
}

// Adjointness of the pairing against the half-(co)products, plus symmetry
// and homogeneity spot checks.
template <typename A, typename PairFn>
LawReport pairing_suite_impl(const A& alg, PairFn&& pairing, const SuiteConfig& cfg) {
    using K = typename A::Key;
    LawReport rep;
    rep.suite = "pairing";
    rep.algebra = alg.name();

    std::vector<std::vector<K>> basis(cfg.max_degree + 1);
    for (int d = 1; d <= cfg.max_degree; ++d) basis[d] = alg.basis(d);

    auto pair_elem = [&](const LinComb<K>& x, const LinComb<K>& y) {
        Rational r(0);
        for (const auto& [a, ca] : x)
            for (const auto& [b, cb] : y) r += ca * cb * pairing(a, b);
        return r;
    };
    auto pair_tensor2 = [&](const LinComb<TensorKey<K>>& x, const LinComb<TensorKey<K>>& y) {
        Rational r(0);
        for (const auto& [ka, ca] : x)
            for (const auto& [kb, cb] : y) {
                if (ka.rank() != 2 || kb.rank() != 2) throw std::logic_error("rank-2 expected");
                const Rational p0 = pairing(ka.factors[0], kb.factors[0]);
                if (is_zero(p0)) continue;
                r += ca * cb * p0 * pairing(ka.factors[1], kb.factors[1]);
            }
        return r;
    };

    degree_tuples<K>(basis, 3, cfg.exhaustive_to, [&](const std::vector<K>& t) {
        const auto ea = LinComb<K>::basis(t[0]);
        const auto eb = LinComb<K>::basis(t[1]);
        const auto ec = LinComb<K>::basis(t[2]);
        const auto ab_pre = lc_tensor(ea, eb);
        const std::string in = t[0].str() + " ; " + t[1].str() + " ; " + t[2].str();
        const Rational l1 = pair_elem(alg_prec(alg, ea, eb), ec);
        const Rational r1 = pair_tensor2(ab_pre, alg_delta_pre(alg, ec));
        ++rep.instances;
        if (l1 != r1) rep.failures.push_back({"pair-adjoint-prec", in, rat_str(l1), rat_str(r1)});
        const Rational l2 = pair_elem(alg_succ(alg, ea, eb), ec);
        const Rational r2 = pair_tensor2(ab_pre, alg_delta_suc(alg, ec));
        ++rep.instances;
        if (l2 != r2) rep.failures.push_back({"pair-adjoint-succ", in, rat_str(l2), rat_str(r2)});
        // mirrored versions
        const auto bc = lc_tensor(eb, ec);
        const Rational l3 = pair_elem(ea, alg_prec(alg, eb, ec));
        const Rational r3 = pair_tensor2(alg_delta_pre(alg, ea), bc);
        ++rep.instances;
        if (l3 != r3) rep.failures.push_back({"pair-adjoint-prec-right", in, rat_str(l3), rat_str(r3)});
        const Rational l4 = pair_elem(ea, alg_succ(alg, eb, ec));
        const Rational r4 = pair_tensor2(alg_delta_suc(alg, ea), bc);
        ++rep.instances;
        if (l4 != r4) rep.failures.push_back({"pair-adjoint-succ-right", in, rat_str(l4), rat_str(r4)});
    });

    degree_tuples<K>(basis, 2, cfg.exhaustive_to, [&](const std::vector<K>& t) {
        ++rep.instances;
        const Rational s1 = pairing(t[0], t[1]);
        const Rational s2 = pairing(t[1], t[0]);
        if (s1 != s2)
            rep.failures.push_back({"pair-symmetric", t[0].str() + " ; " + t[1].str(), rat_str(s1), rat_str(s2)});
        if (t[0].degree() != t[1].degree() && !is_zero(s1))
            rep.failures.push_back({"pair-homogeneous", t[0].str() + " ; " + t[1].str(), rat_str(s1), "0"});
    });
    return rep;
}

std::shared_ptr<HalfProductTable> default_table(int max_degree) {
    // suites over the same bound share one lazily-filled table
    static std::map<int, std::shared_ptr<HalfProductTable>> cache;
    auto it = cache.find(max_degree);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<HalfProductTable>(DecorationSet::single_default(), max_degree);
    cache.emplace(max_degree, table);
    return table;
}

template <typename A>
LawReport dispatch_suite(const A& alg, const std::string& suite, const SuiteConfig& cfg) {
    if (suite == "dendriform") return run_laws(alg, suite, dendriform_laws(), cfg);
    if (suite == "codendriform") return run_laws(alg, suite, codendriform_laws(), cfg);
    if (suite == "dend-bialgebra") return run_laws(alg, suite, dend_bialgebra_laws(), cfg);
    if (suite == "codend-bialgebra") return run_laws(alg, suite, codend_bialgebra_laws(), cfg);
    if (suite == "bidendriform") return run_laws(alg, suite, bidendriform_laws(), cfg);
    if (suite == "module") return module_axioms_impl(alg, cfg);
    if (suite == "tensor") return tensor_suite_impl(alg, cfg);
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

template <typename A>
LawReport check_module_axioms(const A& alg, const SuiteConfig& cfg) {
    return module_axioms_impl(alg, cfg);
}

template LawReport check_module_axioms<FqsymAlgebra>(const FqsymAlgebra&, const SuiteConfig&);
template LawReport check_module_axioms<HckAlgebra>(const HckAlgebra&, const SuiteConfig&);

std::vector<std::string> suite_names() {
    return {"dendriform",    "codendriform", "dend-bialgebra", "codend-bialgebra",
            "bidendriform",  "module",       "tensor",         "pairing"};
}

LawReport run_suite(const std::string& suite, const std::string& algebra, const SuiteConfig& cfg) {
    if (algebra == "fqsym") {
        FqsymAlgebra alg;
        if (suite == "pairing")
            return pairing_suite_impl(
                alg, [](const Perm& a, const Perm& b) { return fqsym::dual_pairing(a, b); }, cfg);
        return dispatch_suite(alg, suite, cfg);
    }
    if (algebra == "hck") {
        HckAlgebra alg(default_table(cfg.max_degree));
        if (suite == "pairing")
            return pairing_suite_impl(
                alg, [](const Forest& a, const Forest& b) { return pair_forests(a, b); }, cfg);
        return dispatch_suite(alg, suite, cfg);
    }
    if (algebra == "hck-dualprime") {
        HckPrimeAlgebra alg(default_table(cfg.max_degree));
        if (suite == "pairing")
            throw std::invalid_argument("the pairing suite pairs with the unprimed half-coproducts; "
                                        "run it on the 'hck' algebra");
        return dispatch_suite(alg, suite, cfg);
    }
    throw std::invalid_argument("unknown algebra: " + algebra + " (fqsym | hck | hck-dualprime)");
}

}  // namespace bidend
