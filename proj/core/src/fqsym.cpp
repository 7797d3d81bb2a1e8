#include "bidend/fqsym.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bidend {

Perm::Perm(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int x : word_) {
        if (x < 1 || x > static_cast<int>(word_.size()) || seen[x - 1])
            throw std::invalid_argument("not a permutation word");
        seen[x - 1] = true;
    }
}

Perm Perm::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
    return Perm(std::move(inv));
}

std::string Perm::str() const {
    if (word_.empty()) return "e";
    if (size() <= 9) {
        std::string s;
        for (int x : word_) s += static_cast<char>('0' + x);
        return s;
    }
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word_[i]);
    }
    return s + "]";
}

Perm standardize(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
    for (int i = 0; i + 1 < n; ++i)
        if (word[idx[i]] == word[idx[i + 1]]) throw std::invalid_argument("standardize: repeated letter");
    std::vector<int> out(n);
    for (int rank = 0; rank < n; ++rank) out[idx[rank]] = rank + 1;
    return Perm(std::move(out));
}

std::vector<Perm> enumerate_perms(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace fqsym {

namespace {

enum class Block { All, LastFromLeft, LastFromRight };

// Enumerate shuffles as position subsets for the left block, in
// lexicographic subset order.
FqElem shuffle_sum(const Perm& u, const Perm& v, Block which) {
    const int n = u.size(), m = v.size();
    FqElem out;
    std::vector<int> sel(n);
    std::iota(sel.begin(), sel.end(), 0);  // first subset {0..n-1}
    auto emit = [&](const std::vector<int>& s) {
        if (which == Block::LastFromLeft && (n == 0 || s.back() != n + m - 1)) return;
        if (which == Block::LastFromRight && n > 0 && s.back() == n + m - 1) return;
        std::vector<int> w(n + m, 0);
        for (int i = 0; i < n; ++i) w[s[i]] = u.word()[i];
        int iv = 0;
        for (int p = 0; p < n + m; ++p)
            if (w[p] == 0) w[p] = v.word()[iv++] + n;
        out.add_term(Perm(std::move(w)), 1);
    };
    if (n == 0) {
        if (which == Block::All) out.add_term(v, 1);
        return out;
    }
    while (true) {
        emit(sel);
        int i = n - 1;
        while (i >= 0 && sel[i] == n + m - n + i) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j < n; ++j) sel[j] = sel[j - 1] + 1;
    }
    return out;
}

}  // namespace

FqElem product(const Perm& u, const Perm& v) {
    if (v.empty()) return FqElem::basis(u);
    return shuffle_sum(u, v, Block::All);
}

FqElem prec(const Perm& u, const Perm& v) {
    if (u.empty() || v.empty()) throw std::domain_error("fqsym::prec: empty factor");
    return shuffle_sum(u, v, Block::LastFromLeft);
}

FqElem succ(const Perm& u, const Perm& v) {
    if (u.empty() || v.empty()) throw std::domain_error("fqsym::succ: empty factor");
    return shuffle_sum(u, v, Block::LastFromRight);
}

FqElem product(const FqElem& x, const FqElem& y) {
    FqElem r;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) r += product(u, v).scaled(cu * cv);
    return r;
}

FqElem prec(const FqElem& x, const FqElem& y) {
    FqElem r;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) r += prec(u, v).scaled(cu * cv);
    return r;
}

FqElem succ(const FqElem& x, const FqElem& y) {
    FqElem r;
    for (const auto& [u, cu] : x)
        for (const auto& [v, cv] : y) r += succ(u, v).scaled(cu * cv);
    return r;
}

namespace {

FqTensor cut_range(const Perm& u, int lo, int hi) {
    FqTensor out;
    const auto& w = u.word();
    for (int i = lo; i <= hi; ++i) {
        const Perm left = standardize(std::vector<int>(w.begin(), w.begin() + i));
        const Perm right = standardize(std::vector<int>(w.begin() + i, w.end()));
        out.add_term(TensorKey<Perm>(left, right), 1);
    }
    return out;
}

int max_position(const Perm& u) {
    const auto& w = u.word();
    return static_cast<int>(std::find(w.begin(), w.end(), u.size()) - w.begin()) + 1;
}

}  // namespace

FqTensor coproduct(const Perm& u) { return cut_range(u, 0, u.size()); }

FqTensor reduced_coproduct(const Perm& u) {
    if (u.empty()) return {};
    return cut_range(u, 1, u.size() - 1);
}

FqTensor delta_pre(const Perm& u) {
    if (u.empty()) throw std::domain_error("fqsym::delta_pre: empty permutation");
    return cut_range(u, max_position(u), u.size() - 1);
}

FqTensor delta_suc(const Perm& u) {
    if (u.empty()) throw std::domain_error("fqsym::delta_suc: empty permutation");
    return cut_range(u, 1, max_position(u) - 1);
}

FqTensor coproduct(const FqElem& x) {
    FqTensor r;
    for (const auto& [u, c] : x) r += coproduct(u).scaled(c);
    return r;
}

FqTensor reduced_coproduct(const FqElem& x) {
    FqTensor r;
    for (const auto& [u, c] : x) r += reduced_coproduct(u).scaled(c);
    return r;
}

FqTensor delta_pre(const FqElem& x) {
    FqTensor r;
    for (const auto& [u, c] : x) r += delta_pre(u).scaled(c);
    return r;
}

FqTensor delta_suc(const FqElem& x) {
    FqTensor r;
    for (const auto& [u, c] : x) r += delta_suc(u).scaled(c);
    return r;
}

Rational dual_pairing(const Perm& u, const Perm& v) {
    return (u.size() == v.size() && v == u.inverse()) ? Rational(1) : Rational(0);
}

Rational dual_pairing(const FqElem& x, const FqElem& y) {
    Rational r(0);
    for (const auto& [u, cu] : x) {
        const Perm inv = u.inverse();
        const Rational c = y.coeff(inv);
        if (!is_zero(c)) r += cu * c;
    }
    return r;
}

Rational dual_pairing_tensor(const FqTensor& x, const FqTensor& y) {
    Rational r(0);
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            if (kx.rank() != ky.rank()) continue;
            Rational term = cx * cy;
            for (int i = 0; i < kx.rank() && !is_zero(term); ++i)
                term *= dual_pairing(kx.factors[i], ky.factors[i]);
            r += term;
        }
    return r;
}

}  // namespace fqsym
}  // namespace bidend
