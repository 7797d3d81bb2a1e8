#ifndef BIDEND_PRIM_HPP
#define BIDEND_PRIM_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "bidend/algebras.hpp"
#include "bidend/matrix.hpp"

namespace bidend {

/*
 * Primitive-element machinery for a bidendriform algebra handle: the nested
 * half-product words omega / omega', the iterated multiplications feeding
 * the eulerian projections T1 (onto ker delta_pre), T2 (from there onto the
 * totally primitive part) and T = T2 o T1, plus kernel-based computation of
 * the totally primitive subspace with the projections as a cross-check.
 */

// Degree-homogeneous subspace in reduced echelon form over the canonical
// degree-n basis: leading coefficients 1, pivots strictly increasing.
template <typename Key>
struct GradedSubspace {
    int degree = 0;
    std::vector<Key> basis;
    std::vector<std::vector<Rational>> rows;

    int dim() const { return static_cast<int>(rows.size()); }

    std::vector<LinComb<Key>> vectors() const {
        std::vector<LinComb<Key>> out;
        for (const auto& r : rows) {
            LinComb<Key> v;
            for (std::size_t i = 0; i < basis.size(); ++i) v.add_term(basis[i], r[i]);
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<Rational> coords(const LinComb<Key>& x) const {
        std::vector<Rational> v(basis.size(), Rational(0));
        std::map<Key, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
        for (const auto& [k, c] : x) {
            auto it = index.find(k);
            if (it == index.end()) throw std::domain_error("coords: key outside the graded basis");
            v[it->second] = c;
        }
        return v;
    }

    bool contains(const LinComb<Key>& x) const { return in_row_span(rows, coords(x)); }
};

// omega(a_1,...,a_n) = a_n < omega(a_1,...,a_{n-1}); omega(a) = a.
template <typename A>
LinComb<typename A::Key> omega(const A& alg, const std::vector<LinComb<typename A::Key>>& args) {
    if (args.empty()) throw std::invalid_argument("omega: needs at least one argument");
    LinComb<typename A::Key> acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = alg_prec(alg, args[i], acc);
    return acc;
}

// omega'(a_1,...,a_n) = omega'(a_1,...,a_{n-1}) > a_n; omega'(a) = a.
template <typename A>
LinComb<typename A::Key> omega_prime(const A& alg, const std::vector<LinComb<typename A::Key>>& args) {
    if (args.empty()) throw std::invalid_argument("omega_prime: needs at least one argument");
    LinComb<typename A::Key> acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = alg_succ(alg, acc, args[i]);
    return acc;
}

// m_<^k(a_1 (x) ... (x) a_k) = m_<^{k-1}(a_2 (x) ... (x) a_k) < a_1.
template <typename A>
LinComb<typename A::Key> m_pre_k(const A& alg, const LinComb<TensorKey<typename A::Key>>& t) {
    using K = typename A::Key;
    LinComb<K> out;
    for (const auto& [key, c] : t) {
        LinComb<K> acc = LinComb<K>::basis(key.factors.back());
        for (int i = key.rank() - 2; i >= 0; --i)
            acc = alg_prec(alg, acc, LinComb<K>::basis(key.factors[i]));
        out += acc.scaled(c);
    }
    return out;
}

// m_>^k(a_1 (x) ... (x) a_k) = a_1 > m_>^{k-1}(a_2 (x) ... (x) a_k).
template <typename A>
LinComb<typename A::Key> m_suc_k(const A& alg, const LinComb<TensorKey<typename A::Key>>& t) {
    using K = typename A::Key;
    LinComb<K> out;
    for (const auto& [key, c] : t) {
        LinComb<K> acc = LinComb<K>::basis(key.factors.back());
        for (int i = key.rank() - 2; i >= 0; --i)
            acc = alg_succ(alg, LinComb<K>::basis(key.factors[i]), acc);
        out += acc.scaled(c);
    }
    return out;
}

// Iterates; delta_pre expands the leftmost factor, delta~ the rightmost.
template <typename A>
LinComb<TensorKey<typename A::Key>> iter_delta_pre(const A& alg, const LinComb<typename A::Key>& x,
                                                   int k) {
    auto cur = as_tensor(x);
    for (int s = 0; s < k; ++s)
        cur = expand_factor(cur, 0, [&alg](const typename A::Key& key) { return alg.delta_pre(key); });
    return cur;
}

template <typename A>
LinComb<TensorKey<typename A::Key>> iter_delta_tilde(const A& alg, const LinComb<typename A::Key>& x,
                                                     int k) {
    auto cur = as_tensor(x);
    for (int s = 0; s < k; ++s)
        cur = expand_factor(cur, s, [&alg](const typename A::Key& key) { return alg.delta_tilde(key); });
    return cur;
}

// T1(a) = sum_{k>=1} (-1)^{k+1} m_<^k(delta_pre^{k-1}(a)); grading truncates
// the sum.  Projects onto ker delta_pre and fixes a modulo half-products.
template <typename A>
LinComb<typename A::Key> t1(const A& alg, const LinComb<typename A::Key>& x) {
    LinComb<typename A::Key> out;
    auto cur = as_tensor(x);
    int sign = 1;
    while (!cur.is_zero()) {
        out += m_pre_k(alg, cur).scaled(Rational(sign));
        cur = expand_factor(cur, 0, [&alg](const typename A::Key& key) { return alg.delta_pre(key); });
        sign = -sign;
    }
    return out;
}

// T2(a) = sum_{k>=1} (-1)^{k+1} m_>^k(delta~^{k-1}(a)); requires
// delta_pre(a) = 0 and lands in the totally primitive part.
template <typename A>
LinComb<typename A::Key> t2(const A& alg, const LinComb<typename A::Key>& x) {
    if (!alg_delta_pre(alg, x).is_zero())
        throw std::domain_error("t2: argument is not left-primitive");
    LinComb<typename A::Key> out;
    auto cur = as_tensor(x);
    int step = 0;
    int sign = 1;
    while (!cur.is_zero()) {
        out += m_suc_k(alg, cur).scaled(Rational(sign));
        cur = expand_factor(cur, step, [&alg](const typename A::Key& key) { return alg.delta_tilde(key); });
        sign = -sign;
        ++step;
    }
    return out;
}

template <typename A>
LinComb<typename A::Key> t_total(const A& alg, const LinComb<typename A::Key>& x) {
    return t2(alg, t1(alg, x));
}

// ker(delta_pre) && ker(delta_suc), the totally primitive subspace, in degree n, by stacking the two
// coproduct matrices and solving the kernel exactly.
template <typename A>
GradedSubspace<typename A::Key> prim_tot_basis(const A& alg, int n) {
    using K = typename A::Key;
    GradedSubspace<K> out;
    out.degree = n;
    out.basis = alg.basis(n);
    const std::size_t cols = out.basis.size();

    // two bands of constraints: delta_pre rows then delta_suc rows
    std::map<TensorKey<K>, std::size_t> pre_rows, suc_rows;
    std::vector<std::vector<Rational>> mat_rows;
    auto add = [&](std::map<TensorKey<K>, std::size_t>& band, const LinComb<TensorKey<K>>& img,
                   std::size_t col) {
        for (const auto& [k, c] : img) {
            auto [it, inserted] = band.emplace(k, mat_rows.size());
            if (inserted) mat_rows.emplace_back(cols, Rational(0));
            mat_rows[it->second][col] += c;
        }
    };
    for (std::size_t j = 0; j < cols; ++j) add(pre_rows, alg.delta_pre(out.basis[j]), j);
    for (std::size_t j = 0; j < cols; ++j) add(suc_rows, alg.delta_suc(out.basis[j]), j);

    Mat m(0, 0);
    if (mat_rows.empty()) mat_rows.emplace_back(cols, Rational(0));
    for (auto& r : mat_rows) m.append_row(std::move(r));
    out.rows = kernel_basis(m);
    return out;
}

// Echelonized span of all half-products of lower-degree basis keys in
// degree n (the subspace the eulerian projections kill).
template <typename A>
GradedSubspace<typename A::Key> half_product_span(const A& alg, int n) {
    using K = typename A::Key;
    GradedSubspace<K> out;
    out.degree = n;
    out.basis = alg.basis(n);
    std::map<K, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index.emplace(out.basis[i], i);
    std::vector<std::vector<Rational>> rows;
    auto push = [&](const LinComb<K>& v) {
        std::vector<Rational> r(out.basis.size(), Rational(0));
        for (const auto& [k, c] : v) r[index.at(k)] = c;
        rows.push_back(std::move(r));
    };
    for (int i = 1; i < n; ++i)
        for (const auto& a : alg.basis(i))
            for (const auto& b : alg.basis(n - i)) {
                push(alg.prec(a, b));
                push(alg.succ(a, b));
            }
    out.rows = row_space_echelon(rows, out.basis.size());
    return out;
}

// Verifies delta_pre^{n-1}(omega(a_1..a_n)) = a_1 (x) ... (x) a_n and the
// vanishing of higher iterates; dually for omega' with delta~.
// Preconditions: a_1 left-primitive and the rest primitive for omega; all
// primitive for omega'.
template <typename A>
bool omega_expansion_check(const A& alg, const std::vector<LinComb<typename A::Key>>& args) {
    using K = typename A::Key;
    const int n = static_cast<int>(args.size());
    if (n == 0) throw std::invalid_argument("omega_expansion_check: empty argument list");
    if (!alg_delta_pre(alg, args[0]).is_zero())
        throw std::domain_error("omega_expansion_check: first argument not left-primitive");
    for (int i = 1; i < n; ++i)
        if (!alg_delta_tilde(alg, args[i]).is_zero())
            throw std::domain_error("omega_expansion_check: later argument not primitive");

    const LinComb<K> w = omega(alg, args);
    LinComb<TensorKey<K>> expect = as_tensor(args[0]);
    for (int i = 1; i < n; ++i) expect = lc_tensor(expect, args[i]);
    if (iter_delta_pre(alg, w, n - 1) != expect) return false;
    if (!iter_delta_pre(alg, w, n).is_zero()) return false;

    bool all_primitive = alg_delta_tilde(alg, args[0]).is_zero();
    if (all_primitive) {
        const LinComb<K> wp = omega_prime(alg, args);
        if (iter_delta_tilde(alg, wp, n - 1) != expect) return false;
        if (!iter_delta_tilde(alg, wp, n).is_zero()) return false;
    }
    return true;
}

}  // namespace bidend

#endif
