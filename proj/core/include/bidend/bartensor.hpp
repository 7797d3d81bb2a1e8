#ifndef BIDEND_BARTENSOR_HPP
#define BIDEND_BARTENSOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "bidend/algebras.hpp"
#include "bidend/lincomb.hpp"

namespace bidend {

/*
 * Tensor product of dendriform algebras.  Dendriform algebras carry no
 * unit, so the tensor square picks up a copy of each factor:
 *
 *     A (bar-x) B = (A (x) B) + (K (x) B) + (A (x) K)
 *
 * realized here as keys holding an optional factor on each side (never both
 * absent).  The half-products case-split on the three sorts of each
 * operand; a BarTensor is itself an algebra handle, so the construction
 * nests and the associator below can be checked to be a dendriform map.
 */

template <typename KA, typename KB>
struct BarKey {
    std::optional<KA> left;
    std::optional<KB> right;

    BarKey() = default;
    BarKey(std::optional<KA> l, std::optional<KB> r) : left(std::move(l)), right(std::move(r)) {
        if (!left && !right) throw std::invalid_argument("BarKey: both factors scalar");
    }

    int degree() const { return (left ? left->degree() : 0) + (right ? right->degree() : 0); }
    std::string str() const {
        const std::string l = left ? left->str() : "1";
        const std::string r = right ? right->str() : "1";
        return l + " (x) " + r;
    }
    bool operator==(const BarKey& o) const { return left == o.left && right == o.right; }
    bool operator<(const BarKey& o) const {
        const int sa = sort(), sb = o.sort();
        if (sa != sb) return sa < sb;
        if (left != o.left) {
            if (!left) return true;
            if (!o.left) return false;
            return *left < *o.left;
        }
        if (right != o.right) {
            if (!right) return true;
            if (!o.right) return false;
            return *right < *o.right;
        }
        return false;
    }
    // 0: pure tensor, 1: right-only, 2: left-only
    int sort() const { return left ? (right ? 0 : 2) : 1; }
};

template <typename AlgA, typename AlgB>
struct BarTensor {
    using KA = typename AlgA::Key;
    using KB = typename AlgB::Key;
    using Key = BarKey<KA, KB>;
    using Elem = LinComb<Key>;

    AlgA A;
    AlgB B;

    BarTensor(AlgA a, AlgB b) : A(std::move(a)), B(std::move(b)) {}

    std::string name() const { return A.name() + " (bar-x) " + B.name(); }

    std::vector<Key> basis(int n) const {
        std::vector<Key> out;
        for (const auto& a : A.basis(n)) out.push_back(Key(a, std::nullopt));
        for (const auto& b : B.basis(n)) out.push_back(Key(std::nullopt, b));
        for (int i = 1; i < n; ++i)
            for (const auto& a : A.basis(i))
                for (const auto& b : B.basis(n - i)) out.push_back(Key(a, b));
        return out;
    }

    Elem prec(const Key& x, const Key& y) const { return half(x, y, true); }
    Elem succ(const Key& x, const Key& y) const { return half(x, y, false); }
    Elem mul(const Key& x, const Key& y) const { return prec(x, y) + succ(x, y); }

private:
    static Elem embed_left(const LinComb<KA>& v) {
        Elem r;
        for (const auto& [k, c] : v) r.add_term(Key(k, std::nullopt), c);
        return r;
    }
    static Elem embed_right(const LinComb<KB>& v) {
        Elem r;
        for (const auto& [k, c] : v) r.add_term(Key(std::nullopt, k), c);
        return r;
    }
    static Elem combine(const LinComb<KA>& va, const LinComb<KB>& vb) {
        Elem r;
        for (const auto& [ka, ca] : va)
            for (const auto& [kb, cb] : vb) r.add_term(Key(ka, kb), ca * cb);
        return r;
    }
    static Elem combine_key_right(const KA& a, const LinComb<KB>& vb) {
        Elem r;
        for (const auto& [kb, cb] : vb) r.add_term(Key(a, kb), cb);
        return r;
    }
    static Elem combine_left_key(const LinComb<KA>& va, const KB& b) {
        Elem r;
        for (const auto& [ka, ca] : va) r.add_term(Key(ka, b), ca);
        return r;
    }

    // the eighteen-case table, condensed by sort
    Elem half(const Key& x, const Key& y, bool left_half) const {
        const bool xa = x.left.has_value(), xb = x.right.has_value();
        const bool ya = y.left.has_value(), yb = y.right.has_value();

        if (xb && yb) {
            const LinComb<KB> bb = left_half ? B.prec(*x.right, *y.right) : B.succ(*x.right, *y.right);
            if (xa && ya) return combine(A.mul(*x.left, *y.left), bb);
            if (xa) return combine_key_right(*x.left, bb);   // (a1 (x) b1) o (1 (x) b2)
            if (ya) return combine_key_right(*y.left, bb);   // (1 (x) b1) o (a2 (x) b2)
            return embed_right(bb);                          // (1 (x) b1) o (1 (x) b2)
        }
        if (xb && !yb) {
            // y = a2 (x) 1
            if (left_half) {
                const LinComb<KA> prod = xa ? A.mul(*x.left, *y.left) : LinComb<KA>::basis(*y.left);
                return combine_left_key(prod, *x.right);
            }
            return {};  // (· (x) b1) > (a2 (x) 1) = 0
        }
        // here x = a1 (x) 1
        if (!yb) {  // y = a2 (x) 1
            const LinComb<KA> aa = left_half ? A.prec(*x.left, *y.left) : A.succ(*x.left, *y.left);
            return embed_left(aa);
        }
        // y has a right factor
        if (left_half) return {};  // (a1 (x) 1) < (· (x) b2) = 0
        if (ya) return combine(A.mul(*x.left, *y.left), LinComb<KB>::basis(*y.right));
        return combine_key_right(*x.left, LinComb<KB>::basis(*y.right));
    }
};

// Unitalized coproducts landing in A (bar-x) A:
//   bar_delta(a)     = delta~(a) + a (x) 1 + 1 (x) a
//   bar_delta_pre(a) = delta_pre(a) + a (x) 1
//   bar_delta_suc(a) = delta_suc(a) + 1 (x) a
template <typename A>
LinComb<BarKey<typename A::Key, typename A::Key>> bar_of_tensor(
    const LinComb<TensorKey<typename A::Key>>& t) {
    using K = typename A::Key;
    LinComb<BarKey<K, K>> r;
    for (const auto& [k, c] : t) {
        if (k.rank() != 2) throw std::logic_error("bar_of_tensor: rank-2 tensor expected");
        r.add_term(BarKey<K, K>(k.factors[0], k.factors[1]), c);
    }
    return r;
}

template <typename A>
LinComb<BarKey<typename A::Key, typename A::Key>> bar_delta(const A& alg,
                                                            const LinComb<typename A::Key>& x) {
    using K = typename A::Key;
    auto r = bar_of_tensor<A>(alg_delta_tilde(alg, x));
    for (const auto& [k, c] : x) {
        r.add_term(BarKey<K, K>(k, std::nullopt), c);
        r.add_term(BarKey<K, K>(std::nullopt, k), c);
    }
    return r;
}

template <typename A>
LinComb<BarKey<typename A::Key, typename A::Key>> bar_delta_pre(const A& alg,
                                                                const LinComb<typename A::Key>& x) {
    using K = typename A::Key;
    auto r = bar_of_tensor<A>(alg_delta_pre(alg, x));
    for (const auto& [k, c] : x) r.add_term(BarKey<K, K>(k, std::nullopt), c);
    return r;
}

template <typename A>
LinComb<BarKey<typename A::Key, typename A::Key>> bar_delta_suc(const A& alg,
                                                                const LinComb<typename A::Key>& x) {
    using K = typename A::Key;
    auto r = bar_of_tensor<A>(alg_delta_suc(alg, x));
    for (const auto& [k, c] : x) r.add_term(BarKey<K, K>(std::nullopt, k), c);
    return r;
}

// The associator (A bar-x B) bar-x C -> A bar-x (B bar-x C); a dendriform
// isomorphism (checked by the law suites, not assumed).
template <typename AlgA, typename AlgB, typename AlgC>
LinComb<BarKey<typename AlgA::Key, BarKey<typename AlgB::Key, typename AlgC::Key>>> bar_associate(
    const LinComb<BarKey<BarKey<typename AlgA::Key, typename AlgB::Key>, typename AlgC::Key>>& x) {
    using KA = typename AlgA::Key;
    using KB = typename AlgB::Key;
    using KC = typename AlgC::Key;
    LinComb<BarKey<KA, BarKey<KB, KC>>> r;
    for (const auto& [k, c] : x) {
        std::optional<KA> a;
        std::optional<KB> b;
        std::optional<KC> cc = k.right;
        if (k.left) {
            a = k.left->left;
            b = k.left->right;
        }
        std::optional<BarKey<KB, KC>> bc;
        if (b || cc) bc = BarKey<KB, KC>(b, cc);
        r.add_term(BarKey<KA, BarKey<KB, KC>>(a, bc), c);
    }
    return r;
}

}  // namespace bidend

#endif
