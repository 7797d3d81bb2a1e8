#include "bidend/halfprod.hpp"

#include <stdexcept>

#include "bidend/hck.hpp"

namespace bidend {

HalfProductTable::HalfProductTable(DecorationSet d, int max_degree)
    : decorations_(std::move(d)), max_degree_(max_degree) {
    if (max_degree_ < 1) throw std::invalid_argument("HalfProductTable: degree bound must be >= 1");
}

void HalfProductTable::ensure_degree(int n) {
    if (grams_.count(n)) return;
    GramMatrix gm = gram(decorations_, n);
    // invert once per degree: fraction-free forward pass, exact back
    // substitution, one column of the identity at a time
    const std::size_t m = gm.basis.size();
    Mat inv(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rational> e(m, Rational(0));
        e[j] = 1;
        std::vector<Rational> x;
        try {
            x = solve_linear(gm.values, e);
        } catch (const std::runtime_error&) {
            // a singular Gram matrix would break the adjoint definition of
            // the half-products; nothing sensible can be computed past this
            throw std::logic_error("halfprod: Gram matrix singular at degree " + std::to_string(n) +
                                   " - verification failure");
        }
        for (std::size_t i = 0; i < m; ++i) inv.at(i, j) = x[i];
    }
    gram_inverse_.emplace(n, std::move(inv));
    grams_.emplace(n, std::move(gm));
}

const std::vector<Forest>& HalfProductTable::basis(int n) {
    ensure_degree(n);
    return grams_.at(n).basis;
}

const GramMatrix& HalfProductTable::gram_at(int n) {
    ensure_degree(n);
    return grams_.at(n);
}

ForestElem HalfProductTable::solve_half(const Forest& f, const Forest& g, bool left) {
    if (f.empty() || g.empty()) throw std::domain_error("halfprod: empty factor");
    const int n = f.degree() + g.degree();
    if (n > max_degree_)
        throw std::domain_error("halfprod: degree " + std::to_string(n) + " exceeds the bound " +
                                std::to_string(max_degree_));
    auto& cache = left ? prec_cache_ : succ_cache_;
    const auto key = std::make_pair(f.str(), g.str());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ensure_degree(n);
    const GramMatrix& gm = grams_.at(n);
    const Mat& inv = gram_inverse_.at(n);
    const std::size_t m = gm.basis.size();

    std::vector<Rational> rhs(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        const ForestTensor dh = left ? delta_pre(gm.basis[i]) : delta_suc(gm.basis[i]);
        Rational v(0);
        for (const auto& [k, c] : dh) v += c * pair_forests(f, k.factors[0]) * pair_forests(g, k.factors[1]);
        rhs[i] = v;
    }
    ForestElem out;
    for (std::size_t i = 0; i < m; ++i) {
        Rational v(0);
        for (std::size_t j = 0; j < m; ++j)
            if (!is_zero(inv.at(i, j)) && !is_zero(rhs[j])) v += inv.at(i, j) * rhs[j];
        out.add_term(gm.basis[i], v);
    }
    cache.emplace(key, out);
    return out;
}

ForestElem HalfProductTable::prec(const Forest& f, const Forest& g) { return solve_half(f, g, true); }
ForestElem HalfProductTable::succ(const Forest& f, const Forest& g) { return solve_half(f, g, false); }

ForestElem HalfProductTable::prec(const ForestElem& x, const ForestElem& y) {
    ForestElem r;
    for (const auto& [f, cf] : x)
        for (const auto& [g, cg] : y) r += prec(f, g).scaled(cf * cg);
    return r;
}

ForestElem HalfProductTable::succ(const ForestElem& x, const ForestElem& y) {
    ForestElem r;
    for (const auto& [f, cf] : x)
        for (const auto& [g, cg] : y) r += succ(f, g).scaled(cf * cg);
    return r;
}

ForestElem HalfProductTable::mul(const ForestElem& x, const ForestElem& y) { return concat(x, y); }

void HalfProductTable::build_all() {
    for (int i = 1; i < max_degree_; ++i)
        for (int j = 1; i + j <= max_degree_; ++j)
            for (const auto& f : basis(i))
                for (const auto& g : basis(j)) {
                    prec(f, g);
                    succ(f, g);
                }
}

std::vector<HalfProductTable::Entry> HalfProductTable::entries() const {
    std::vector<Entry> out;
    for (const auto& [key, val] : prec_cache_) {
        auto s = succ_cache_.find(key);
        if (s == succ_cache_.end()) continue;
        Entry e;
        e.left = parse_forest(key.first, &decorations_);
        e.right = parse_forest(key.second, &decorations_);
        e.prec = val;
        e.succ = s->second;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace bidend
