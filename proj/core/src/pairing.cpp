#include "bidend/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bidend/hck.hpp"

namespace bidend {

namespace {

std::map<std::pair<std::string, std::string>, Rational>& pair_cache() {
    static std::map<std::pair<std::string, std::string>, Rational> cache;
    return cache;
}

Rational pair_rec(const Forest& f, const Forest& g, bool split_first);

Rational pair_lin(const Forest& f, const ForestElem& y, bool split_first) {
    Rational r(0);
    for (const auto& [g, c] : y) r += c * pair_rec(f, g, split_first);
    return r;
}

Rational pair_rec(const Forest& f, const Forest& g, bool split_first) {
    if (f.weight() != g.weight() || f.degree() != g.degree()) return 0;
    if (f.empty()) return g.empty() ? 1 : 0;
    const auto key = std::make_pair(f.str(), g.str());
    if (split_first) {
        auto it = pair_cache().find(key);
        if (it != pair_cache().end()) return it->second;
    }
    Rational r(0);
    if (f.tree_count() == 1) {
        const Tree& t = f.trees()[0];
        r = pair_lin(Forest(t.children()), xi(t.decoration(), g), split_first);
    } else {
        const Forest f1 = split_first ? f.first_tree() : f.front_part();
        const Forest f2 = split_first ? f.rest() : f.last_tree();
        for (const auto& [k, c] : coproduct(g))
            r += c * pair_rec(f1, k.factors[0], split_first) * pair_rec(f2, k.factors[1], split_first);
    }
    if (split_first) pair_cache().emplace(key, r);
    return r;
}

}  // namespace

Rational pair_forests(const Forest& f, const Forest& g) { return pair_rec(f, g, true); }

Rational pair_forests_alt_split(const Forest& f, const Forest& g) { return pair_rec(f, g, false); }

Rational pair_forests(const ForestElem& x, const ForestElem& y) {
    Rational r(0);
    for (const auto& [f, cf] : x)
        for (const auto& [g, cg] : y) r += cf * cg * pair_forests(f, g);
    return r;
}

Rational pair_tensor(const ForestTensor& x, const ForestTensor& y) {
    Rational r(0);
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y) {
            if (kx.rank() != ky.rank()) continue;
            Rational term = cx * cy;
            for (int i = 0; i < kx.rank() && !is_zero(term); ++i)
                term *= pair_forests(kx.factors[i], ky.factors[i]);
            r += term;
        }
    return r;
}

void clear_pairing_cache() { pair_cache().clear(); }

VertexOrders::VertexOrders(const Forest& f) {
    int clock = 0;
    struct Rec {
        std::vector<int>& pre;
        std::vector<int>& post;
        std::vector<std::string>& label;
        int& clock;
        void visit(const Tree& t) {
            const int me = static_cast<int>(pre.size());
            pre.push_back(clock++);
            post.push_back(-1);
            label.push_back(t.decoration().label);
            for (const auto& c : t.children()) visit(c);
            post[me] = clock;
        }
    } rec{pre_, post_, label_, clock};
    for (const auto& t : f.trees()) rec.visit(t);
}

bool VertexOrders::check_invariants() const {
    const int n = count();
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == w) continue;
            const bool hvw = higher(v, w), hwv = higher(w, v);
            if (hvw && hwv) return false;
            // comparable by exactly one of >=high (one direction) or left-ness
            const bool ge = dl_ge(v, w), le = dl_ge(w, v);
            if (ge == le) return false;  // totality + antisymmetry
        }
    // transitivity of the total order
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (dl_ge(a, b) && dl_ge(b, c) && !dl_ge(a, c)) return false;
    return true;
}

Rational pair_oracle(const Forest& f, const Forest& g, int vertex_cap) {
    if (f.weight() > vertex_cap || g.weight() > vertex_cap)
        throw std::domain_error("pair_oracle: forest exceeds the vertex cap");
    if (f.weight() != g.weight()) return 0;
    const VertexOrders vf(f), vg(g);
    const int n = vf.count();
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    long count = 0;

    // backtracking over bijections; conditions checked incrementally
    struct Rec {
        const VertexOrders& vf;
        const VertexOrders& vg;
        std::vector<int>& image;
        std::vector<bool>& used;
        long& count;
        int n;
        void go(int v) {
            if (v == n) {
                ++count;
                return;
            }
            for (int w = 0; w < n; ++w) {
                if (used[w] || vf.decoration(v) != vg.decoration(w)) continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u) {
                    const int iu = image[u];
                    if (vf.higher(v, u) && !vg.dl_ge(w, iu)) ok = false;
                    if (vf.higher(u, v) && !vg.dl_ge(iu, w)) ok = false;
                    if (vg.higher(w, iu) && !vf.dl_ge(v, u)) ok = false;
                    if (vg.higher(iu, w) && !vf.dl_ge(u, v)) ok = false;
                }
                if (!ok) continue;
                used[w] = true;
                image[v] = w;
                go(v + 1);
                used[w] = false;
                image[v] = -1;
            }
        }
    } rec{vf, vg, image, used, count, n};
    rec.go(0);
    return Rational(static_cast<long>(count));
}

GramMatrix gram(const DecorationSet& d, int n) {
    if (n < 1) throw std::invalid_argument("gram: degree must be >= 1");
    GramMatrix gm;
    gm.degree = n;
    gm.basis = enumerate_forests(d, n);
    const std::size_t m = gm.basis.size();
    gm.values = Mat(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const Rational v = pair_forests(gm.basis[i], gm.basis[j]);
            gm.values.at(i, j) = v;
            gm.values.at(j, i) = v;
        }
    // symmetry of the recursion itself (upper triangle recomputed)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (pair_forests(gm.basis[i], gm.basis[j]) != gm.values.at(i, j))
                throw std::logic_error("gram: pairing is not symmetric");
    return gm;
}

Forest ladder(int k) {
    if (k < 0) throw std::invalid_argument("ladder: negative length");
    Forest f;
    const Decoration star{"*", 1};
    for (int i = 0; i < k; ++i) f = Forest(b_plus(star, f));
    return f;
}

}  // namespace bidend
