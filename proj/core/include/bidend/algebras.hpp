#ifndef BIDEND_ALGEBRAS_HPP
#define BIDEND_ALGEBRAS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidend/fqsym.hpp"
#include "bidend/halfprod.hpp"
#include "bidend/hck.hpp"

namespace bidend {

/*
 * Dispatch records exposing one algebra (basis enumeration per degree,
 * half/full products, half/reduced coproducts) behind a common compile-time
 * interface, so the projection and law machinery is written once.
 *
 * Each record checks the splitting identities  m = prec + succ  and
 * delta~ = delta_pre + delta_suc  on low degrees when constructed.
 */

struct FqsymAlgebra {
    using Key = Perm;

    FqsymAlgebra() { verify_splitting(*this, 3); }

    static std::string name() { return "fqsym"; }
    std::vector<Key> basis(int n) const { return enumerate_perms(n); }
    LinComb<Key> prec(const Key& a, const Key& b) const { return fqsym::prec(a, b); }
    LinComb<Key> succ(const Key& a, const Key& b) const { return fqsym::succ(a, b); }
    LinComb<Key> mul(const Key& a, const Key& b) const { return fqsym::product(a, b); }
    LinComb<TensorKey<Key>> delta_pre(const Key& a) const { return fqsym::delta_pre(a); }
    LinComb<TensorKey<Key>> delta_suc(const Key& a) const { return fqsym::delta_suc(a); }
    LinComb<TensorKey<Key>> delta_tilde(const Key& a) const { return fqsym::reduced_coproduct(a); }
    LinComb<TensorKey<Key>> delta_full(const Key& a) const { return fqsym::coproduct(a); }

    template <typename A>
    static void verify_splitting(const A& alg, int max_degree) {
        for (int n = 1; n <= max_degree; ++n)
            for (const auto& k : alg.basis(n))
                if (alg.delta_pre(k) + alg.delta_suc(k) != alg.delta_tilde(k))
                    throw std::logic_error(alg.name() + ": coproduct splitting fails on " + k.str());
        for (int i = 1; i < max_degree; ++i)
            for (int j = 1; i + j <= max_degree; ++j)
                for (const auto& a : alg.basis(i))
                    for (const auto& b : alg.basis(j))
                        if (alg.prec(a, b) + alg.succ(a, b) != alg.mul(a, b))
                            throw std::logic_error(alg.name() + ": product splitting fails on " + a.str() +
                                                   ", " + b.str());
    }
};

// Forest algebra with the reconstructed half-products and the bidendriform
// half-coproducts (single-vertex trees totally primitive).
struct HckAlgebra {
    using Key = Forest;
    std::shared_ptr<HalfProductTable> table;

    explicit HckAlgebra(std::shared_ptr<HalfProductTable> t, int check_degree = 3) : table(std::move(t)) {
        FqsymAlgebra::verify_splitting(*this, std::min(check_degree, table->max_degree()));
    }

    std::string name() const { return "hck"; }
    std::vector<Key> basis(int n) const { return enumerate_forests(table->decorations(), n); }
    LinComb<Key> prec(const Key& a, const Key& b) const { return table->prec(a, b); }
    LinComb<Key> succ(const Key& a, const Key& b) const { return table->succ(a, b); }
    LinComb<Key> mul(const Key& a, const Key& b) const { return LinComb<Key>::basis(a.concat(b)); }
    LinComb<TensorKey<Key>> delta_pre(const Key& a) const { return bidend::delta_pre(a); }
    LinComb<TensorKey<Key>> delta_suc(const Key& a) const { return bidend::delta_suc(a); }
    LinComb<TensorKey<Key>> delta_tilde(const Key& a) const { return reduced_coproduct(a); }
    LinComb<TensorKey<Key>> delta_full(const Key& a) const { return coproduct(a); }
};

// Forest algebra carrying the dual-flavoured half-coproducts instead.  The
// coproduct side is codendriform and compatible with concatenation, but the
// bidendriform compatibilities fail (witness d[d]); the law suites exercise
// exactly that contrast.
struct HckPrimeAlgebra {
    using Key = Forest;
    std::shared_ptr<HalfProductTable> table;

    explicit HckPrimeAlgebra(std::shared_ptr<HalfProductTable> t, int check_degree = 3)
        : table(std::move(t)) {
        FqsymAlgebra::verify_splitting(*this, std::min(check_degree, table->max_degree()));
    }

    std::string name() const { return "hck-dualprime"; }
    std::vector<Key> basis(int n) const { return enumerate_forests(table->decorations(), n); }
    LinComb<Key> prec(const Key& a, const Key& b) const { return table->prec(a, b); }
    LinComb<Key> succ(const Key& a, const Key& b) const { return table->succ(a, b); }
    LinComb<Key> mul(const Key& a, const Key& b) const { return LinComb<Key>::basis(a.concat(b)); }
    LinComb<TensorKey<Key>> delta_pre(const Key& a) const { return delta_pre_prime(a); }
    LinComb<TensorKey<Key>> delta_suc(const Key& a) const { return delta_suc_prime(a); }
    LinComb<TensorKey<Key>> delta_tilde(const Key& a) const { return reduced_coproduct(a); }
    LinComb<TensorKey<Key>> delta_full(const Key& a) const { return coproduct(a); }
};

// Bilinear lifts shared by every handle.
template <typename A>
LinComb<typename A::Key> alg_prec(const A& alg, const LinComb<typename A::Key>& x,
                                  const LinComb<typename A::Key>& y) {
    LinComb<typename A::Key> r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r += alg.prec(a, b).scaled(ca * cb);
    return r;
}

template <typename A>
LinComb<typename A::Key> alg_succ(const A& alg, const LinComb<typename A::Key>& x,
                                  const LinComb<typename A::Key>& y) {
    LinComb<typename A::Key> r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r += alg.succ(a, b).scaled(ca * cb);
    return r;
}

template <typename A>
LinComb<typename A::Key> alg_mul(const A& alg, const LinComb<typename A::Key>& x,
                                 const LinComb<typename A::Key>& y) {
    LinComb<typename A::Key> r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r += alg.mul(a, b).scaled(ca * cb);
    return r;
}

template <typename A>
LinComb<TensorKey<typename A::Key>> alg_delta_pre(const A& alg, const LinComb<typename A::Key>& x) {
    LinComb<TensorKey<typename A::Key>> r;
    for (const auto& [a, c] : x) r += alg.delta_pre(a).scaled(c);
    return r;
}

template <typename A>
LinComb<TensorKey<typename A::Key>> alg_delta_suc(const A& alg, const LinComb<typename A::Key>& x) {
    LinComb<TensorKey<typename A::Key>> r;
    for (const auto& [a, c] : x) r += alg.delta_suc(a).scaled(c);
    return r;
}

template <typename A>
LinComb<TensorKey<typename A::Key>> alg_delta_tilde(const A& alg, const LinComb<typename A::Key>& x) {
    LinComb<TensorKey<typename A::Key>> r;
    for (const auto& [a, c] : x) r += alg.delta_tilde(a).scaled(c);
    return r;
}

}  // namespace bidend

#endif
