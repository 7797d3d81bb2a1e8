#ifndef BIDEND_LAWS_HPP
#define BIDEND_LAWS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bidend/algebras.hpp"
#include "bidend/bartensor.hpp"

namespace bidend {

/*
 * Axiom checking, data-driven: every law is a pair of formal sums of
 * operation sequences acting on a tensor of basis inputs, and one evaluator
 * interprets them over any algebra handle.  Adding an axiom is one table
 * line; the suites below cover the dendriform / codendriform axioms, the
 * (co)dendriform-bialgebra compatibilities and the bidendriform ones.
 */

enum class LawOpKind {
    ProdPrec,  // contract factors (pos, pos+1) with <
    ProdSucc,  //   ... with >
    ProdFull,  //   ... with the full product
    CopPrec,   // expand factor pos with the left half-coproduct
    CopSucc,   //   ... right half-coproduct
    CopFull,   //   ... reduced coproduct
    Swap       // transpose factors (pos, pos+1)
};

struct LawOp {
    LawOpKind kind;
    int pos;  // zero-based tensor position
};

using OpSeq = std::vector<LawOp>;

struct LawSide {
    // formal sum  sum_i coeff_i * (op sequence applied to the input tensor)
    std::vector<std::pair<int, OpSeq>> terms;
};

struct Law {
    std::string id;
    int arity;
    LawSide lhs, rhs;
};

struct LawFailure {
    std::string law;
    std::string inputs;
    std::string lhs, rhs;
};

struct LawReport {
    std::string suite;
    std::string algebra;
    long instances = 0;
    std::vector<LawFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Law tables.
std::vector<Law> dendriform_laws();        // half-product associativity triple
std::vector<Law> codendriform_laws();      // the coalgebra duals
std::vector<Law> dend_bialgebra_laws();    // reduced coproduct vs half-products
std::vector<Law> codend_bialgebra_laws();  // half-coproducts vs full product
std::vector<Law> bidendriform_laws();      // the four half-half compatibilities

// One evaluator for all of them.
template <typename A>
class LawEngine {
public:
    using K = typename A::Key;
    using T = LinComb<TensorKey<K>>;

    explicit LawEngine(const A& alg) : alg_(alg) {}

    T eval(const OpSeq& ops, T x) const {
        for (const auto& op : ops) x = step(op, std::move(x));
        return x;
    }

    T eval_side(const LawSide& side, const T& start) const {
        T acc;
        for (const auto& [coeff, ops] : side.terms) acc += eval(ops, start).scaled(Rational(coeff));
        return acc;
    }

    // nullopt on success, otherwise the failure record
    std::optional<LawFailure> check(const Law& law, const std::vector<K>& inputs) const {
        TensorKey<K> start_key(inputs);
        T start;
        start.add_term(start_key, 1);
        const T lhs = eval_side(law.lhs, start);
        const T rhs = eval_side(law.rhs, start);
        if (lhs == rhs) return std::nullopt;
        LawFailure f;
        f.law = law.id;
        f.inputs = start_key.str();
        f.lhs = lhs.str();
        f.rhs = rhs.str();
        return f;
    }

private:
    T step(const LawOp& op, T x) const {
        switch (op.kind) {
            case LawOpKind::ProdPrec:
                return contract_pair(x, op.pos, [this](const K& a, const K& b) { return alg_.prec(a, b); });
            case LawOpKind::ProdSucc:
                return contract_pair(x, op.pos, [this](const K& a, const K& b) { return alg_.succ(a, b); });
            case LawOpKind::ProdFull:
                return contract_pair(x, op.pos, [this](const K& a, const K& b) { return alg_.mul(a, b); });
            case LawOpKind::CopPrec:
                return cop(x, op.pos, 0);
            case LawOpKind::CopSucc:
                return cop(x, op.pos, 1);
            case LawOpKind::CopFull:
                return cop(x, op.pos, 2);
            case LawOpKind::Swap:
                return swap_factors(x, op.pos);
        }
        throw std::logic_error("unreachable");
    }

    T cop(const T& x, int pos, int flavour) const {
        if constexpr (requires(const A& a, const K& k) { a.delta_pre(k); }) {
            return expand_factor(x, pos, [this, flavour](const K& k) {
                return flavour == 0 ? alg_.delta_pre(k) : flavour == 1 ? alg_.delta_suc(k) : alg_.delta_tilde(k);
            });
        } else {
            throw std::logic_error("law uses a coproduct on an algebra without one");
        }
    }

    const A& alg_;
};

/*
 * Suite runner.  Exhaustive over all basis tuples with total degree up to
 * `exhaustive_to`, then `samples` seeded-random tuples per law with total
 * degree up to `max_degree`.  Reports are deterministic for a fixed seed.
 */
struct SuiteConfig {
    int max_degree = 6;
    int exhaustive_to = 4;
    int samples = 500;
    std::uint64_t seed = 1;
    bool stop_at_first_failure = false;
};

template <typename A>
LawReport run_laws(const A& alg, const std::string& suite_name, const std::vector<Law>& laws,
                   const SuiteConfig& cfg) {
    LawReport rep;
    rep.suite = suite_name;
    rep.algebra = alg.name();
    LawEngine<A> engine(alg);
    using K = typename A::Key;

    // degree-indexed basis cache
    std::vector<std::vector<K>> basis(cfg.max_degree + 1);
    for (int d = 1; d <= cfg.max_degree; ++d) basis[d] = alg.basis(d);

    auto run_instance = [&](const Law& law, const std::vector<K>& inputs) {
        ++rep.instances;
        auto fail = engine.check(law, inputs);
        if (fail) rep.failures.push_back(*fail);
        return !fail;
    };

    for (const Law& law : laws) {
        // exhaustive band
        std::vector<std::vector<K>> tuples;
        std::vector<K> cur;
        struct Rec {
            int arity, bound;
            const std::vector<std::vector<K>>& basis;
            std::vector<std::vector<K>>& tuples;
            std::vector<K>& cur;
            void go(int i, int used) {
                if (i == arity) {
                    tuples.push_back(cur);
                    return;
                }
                for (int d = 1; used + d + (arity - 1 - i) <= bound; ++d)
                    for (const auto& k : basis[d]) {
                        cur.push_back(k);
                        go(i + 1, used + d);
                        cur.pop_back();
                    }
            }
        } rec{law.arity, cfg.exhaustive_to, basis, tuples, cur};
        rec.go(0, 0);
        for (const auto& tup : tuples) {
            if (!run_instance(law, tup) && cfg.stop_at_first_failure) return rep;
        }

        // randomized band
        std::mt19937_64 rng(cfg.seed);
        for (int s = 0; s < cfg.samples; ++s) {
            std::vector<K> tup;
            // split a random total degree in [arity, max_degree] into parts
            std::uniform_int_distribution<int> dtot(law.arity, cfg.max_degree);
            int total = dtot(rng);
            int left = total;
            bool ok = true;
            for (int i = 0; i < law.arity; ++i) {
                const int remaining_slots = law.arity - 1 - i;
                const int hi = left - remaining_slots;
                if (hi < 1) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<int> dd(1, hi);
                const int d = (i == law.arity - 1) ? hi : dd(rng);
                if (basis[d].empty()) {
                    ok = false;
                    break;
                }
                std::uniform_int_distribution<std::size_t> di(0, basis[d].size() - 1);
                tup.push_back(basis[d][di(rng)]);
                left -= d;
            }
            if (!ok) continue;
            if (!run_instance(law, tup) && cfg.stop_at_first_failure) return rep;
        }
    }
    return rep;
}

// Dendriform-module axioms, for the algebra acting on itself and on
// A (bar-x) A through the unitalized coproduct, plus the statement that the
// unitalized half-coproducts are module maps.
template <typename A>
LawReport check_module_axioms(const A& alg, const SuiteConfig& cfg);

// Entry point used by the command line: algebra is one of
// "fqsym", "hck", "hck-dualprime".
LawReport run_suite(const std::string& suite, const std::string& algebra, const SuiteConfig& cfg);

std::vector<std::string> suite_names();

}  // namespace bidend

#endif
