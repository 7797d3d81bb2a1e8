#ifndef BIDEND_LINCOMB_HPP
#define BIDEND_LINCOMB_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidend/rational.hpp"

namespace bidend {

/*
 * Sparse linear combinations over an ordered basis.
 *
 * A basis key type K must provide:
 *   - a strict weak order  operator<  (total and deterministic across runs),
 *   - operator==,
 *   - int degree() const,
 *   - std::string str() const   (canonical encoding).
 *
 * Invariants kept by every operation: no stored coefficient is zero and
 * iteration follows the basis order.
 */
template <typename K>
class LinComb {
public:
    using Key = K;
    using Terms = std::map<K, Rational>;

    LinComb() = default;

    static LinComb basis(const K& k, const Rational& c = 1) {
        LinComb x;
        x.add_term(k, c);
        return x;
    }

    void add_term(const K& k, const Rational& c) {
        if (bidend::is_zero(c)) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (bidend::is_zero(it->second)) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(const LinComb& a) {
        LinComb r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend LinComb operator*(const Rational& c, const LinComb& a) { return a.scaled(c); }

    LinComb scaled(const Rational& c) const {
        LinComb r;
        if (bidend::is_zero(c)) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, c * v);
        return r;
    }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const K& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // Largest degree among supported terms; -1 for zero.
    int max_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
        return d;
    }

    bool homogeneous(int n) const {
        for (const auto& [k, c] : terms_)
            if (k.degree() != n) return false;
        return true;
    }

    // Terms in basis order, "R*B" each, joined by " + "; "0" when empty.
    // B is parenthesized when its encoding contains a space.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            std::string b = k.str();
            os << rat_str(c) << '*';
            if (b.find(' ') != std::string::npos)
                os << '(' << b << ')';
            else
                os << b;
        }
        return os.str();
    }

private:
    Terms terms_;
};

// Fixed-length tensor-power keys; factors render joined by " # ".
template <typename K>
struct TensorKey {
    std::vector<K> factors;

    TensorKey() = default;
    explicit TensorKey(std::vector<K> f) : factors(std::move(f)) {}
    TensorKey(const K& a, const K& b) : factors{a, b} {}

    int rank() const { return static_cast<int>(factors.size()); }
    int degree() const {
        int d = 0;
        for (const auto& f : factors) d += f.degree();
        return d;
    }
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " # ";
            s += factors[i].str();
        }
        return s;
    }
    bool operator==(const TensorKey& o) const { return factors == o.factors; }
    bool operator<(const TensorKey& o) const {
        if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i] < o.factors[i]) return true;
            if (o.factors[i] < factors[i]) return false;
        }
        return false;
    }
};

template <typename K>
LinComb<TensorKey<K>> lc_tensor(const LinComb<K>& x, const LinComb<K>& y) {
    LinComb<TensorKey<K>> r;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) r.add_term(TensorKey<K>(kx, ky), cx * cy);
    return r;
}

template <typename K>
LinComb<TensorKey<K>> lc_tensor(const LinComb<TensorKey<K>>& x, const LinComb<K>& y) {
    LinComb<TensorKey<K>> r;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            TensorKey<K> t = kx;
            t.factors.push_back(ky);
            r.add_term(t, cx * cy);
        }
    return r;
}

// Linear extension of a basis-defined map.  f must be total on the support
// of x; report a domain error otherwise by returning std::nullopt from f.
template <typename K, typename K2>
LinComb<K2> lc_apply(const std::function<std::optional<LinComb<K2>>(const K&)>& f,
                     const LinComb<K>& x) {
    LinComb<K2> r;
    for (const auto& [k, c] : x) {
        auto img = f(k);
        if (!img) throw std::domain_error("lc_apply: map undefined on basis key '" + k.str() + "'");
        r += img->scaled(c);
    }
    return r;
}

template <typename K>
LinComb<TensorKey<K>> as_tensor(const LinComb<K>& x) {
    LinComb<TensorKey<K>> r;
    for (const auto& [k, c] : x) r.add_term(TensorKey<K>(std::vector<K>{k}), c);
    return r;
}

// Replace factor `pos` (0-based) by the rank-2 expansion f(key).
template <typename K, typename F>
LinComb<TensorKey<K>> expand_factor(const LinComb<TensorKey<K>>& x, int pos, F&& f) {
    LinComb<TensorKey<K>> r;
    for (const auto& [t, c] : x) {
        const LinComb<TensorKey<K>> img = f(t.factors.at(pos));
        for (const auto& [t2, c2] : img) {
            TensorKey<K> nt;
            nt.factors.reserve(t.factors.size() + t2.factors.size() - 1);
            for (int i = 0; i < pos; ++i) nt.factors.push_back(t.factors[i]);
            for (const auto& g : t2.factors) nt.factors.push_back(g);
            for (std::size_t i = pos + 1; i < t.factors.size(); ++i) nt.factors.push_back(t.factors[i]);
            r.add_term(nt, c * c2);
        }
    }
    return r;
}

// Contract factors pos, pos+1 through the bilinear map g(k1, k2) -> LinComb<K>.
template <typename K, typename G>
LinComb<TensorKey<K>> contract_pair(const LinComb<TensorKey<K>>& x, int pos, G&& g) {
    LinComb<TensorKey<K>> r;
    for (const auto& [t, c] : x) {
        const LinComb<K> img = g(t.factors.at(pos), t.factors.at(pos + 1));
        for (const auto& [k2, c2] : img) {
            TensorKey<K> nt;
            nt.factors.reserve(t.factors.size() - 1);
            for (int i = 0; i < pos; ++i) nt.factors.push_back(t.factors[i]);
            nt.factors.push_back(k2);
            for (std::size_t i = pos + 2; i < t.factors.size(); ++i) nt.factors.push_back(t.factors[i]);
            r.add_term(nt, c * c2);
        }
    }
    return r;
}

template <typename K>
LinComb<TensorKey<K>> swap_factors(const LinComb<TensorKey<K>>& x, int pos) {
    LinComb<TensorKey<K>> r;
    for (const auto& [t, c] : x) {
        TensorKey<K> nt = t;
        std::swap(nt.factors.at(pos), nt.factors.at(pos + 1));
        r.add_term(nt, c);
    }
    return r;
}

template <typename K>
LinComb<K> rank1_collapse(const LinComb<TensorKey<K>>& x) {
    LinComb<K> r;
    for (const auto& [t, c] : x) {
        if (t.rank() != 1) throw std::logic_error("rank1_collapse: tensor rank != 1");
        r.add_term(t.factors[0], c);
    }
    return r;
}

}  // namespace bidend

#endif
