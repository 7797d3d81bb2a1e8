#include "bidend/hck.hpp"

#include <cassert>
#include <map>

namespace bidend {

ForestElem concat(const ForestElem& x, const ForestElem& y) {
    ForestElem r;
    for (const auto& [f, cf] : x)
        for (const auto& [g, cg] : y) r.add_term(f.concat(g), cf * cg);
    return r;
}

namespace {

// per-forest caches; all values immutable once computed
template <typename F>
const ForestTensor& cached(std::map<Forest, ForestTensor>& cache, const Forest& f, F&& compute) {
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    return cache.emplace(f, compute(f)).first->second;
}

}  // namespace

ForestTensor coproduct(const Forest& f) {
    static std::map<Forest, ForestTensor> cache;
    return cached(cache, f, [](const Forest& g) {
        ForestTensor r;
        r.add_term(TensorKey<Forest>(g, Forest()), 1);
        if (!g.empty()) {
            r.add_term(TensorKey<Forest>(Forest(), g), 1);
            for (const auto& ct : enumerate_cuts(g)) r.add_term(TensorKey<Forest>(ct.pruned, ct.root), 1);
        }
        return r;
    });
}

ForestTensor coproduct(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += coproduct(f).scaled(c);
    return r;
}

ForestTensor reduced_coproduct(const Forest& f) {
    static std::map<Forest, ForestTensor> cache;
    return cached(cache, f, [](const Forest& g) {
        ForestTensor r;
        for (const auto& ct : enumerate_cuts(g)) r.add_term(TensorKey<Forest>(ct.pruned, ct.root), 1);
        return r;
    });
}

ForestTensor reduced_coproduct(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += reduced_coproduct(f).scaled(c);
    return r;
}

Rational counit(const ForestElem& x) { return x.coeff(Forest()); }

namespace {

// Edge paths (tree index prepended) on the root-of-last-tree -> rightmost
// leaf path.
std::vector<std::vector<int>> rightmost_path_edges(const Forest& f) {
    std::vector<std::vector<int>> edges;
    const int tidx = f.tree_count() - 1;
    const Tree* cur = &f.trees().back();
    std::vector<int> path{tidx};
    while (!cur->children().empty()) {
        const int j = static_cast<int>(cur->children().size()) - 1;
        path.push_back(j);
        edges.push_back(path);
        cur = &cur->children()[j];
    }
    return edges;
}

bool cut_meets_rightmost_path(const CutTriple& ct, const std::vector<std::vector<int>>& rm_edges,
                              int last_tree) {
    const TreeCut& tc = ct.cut.parts.at(last_tree);
    if (tc.kind != CutKind::Edges) return false;
    for (const auto& e : tc.edges) {
        std::vector<int> full{last_tree};
        full.insert(full.end(), e.begin(), e.end());
        for (const auto& rme : rm_edges)
            if (full == rme) return true;
    }
    return false;
}

ForestTensor map_right_bplus(const ForestTensor& t, const Decoration& d) {
    ForestTensor r;
    for (const auto& [k, c] : t) {
        r.add_term(TensorKey<Forest>(k.factors[0], Forest(b_plus(d, k.factors[1]))), c);
    }
    return r;
}

// The five-term compatibility of the left half-coproduct with the product,
// given Delta~ of both factors and Delta_pre of the right factor:
//   Delta_pre(ab) = a'b'< (x) a''b''< + a'b (x) a'' + ab'< (x) b''<
//                   + b'< (x) ab''< + b (x) a.
ForestTensor half_cop_product_rule(const Forest& a, const Forest& b, const ForestTensor& ta,
                                   const ForestTensor& tb_half, bool left_flavour) {
    ForestTensor out;
    for (const auto& [ka, ca] : ta)
        for (const auto& [kb, cb] : tb_half)
            out.add_term(TensorKey<Forest>(ka.factors[0].concat(kb.factors[0]),
                                           ka.factors[1].concat(kb.factors[1])),
                         ca * cb);
    if (left_flavour) {
        for (const auto& [ka, ca] : ta)
            out.add_term(TensorKey<Forest>(ka.factors[0].concat(b), ka.factors[1]), ca);
    } else {
        for (const auto& [ka, ca] : ta)
            out.add_term(TensorKey<Forest>(ka.factors[0], ka.factors[1].concat(b)), ca);
    }
    for (const auto& [kb, cb] : tb_half) {
        out.add_term(TensorKey<Forest>(a.concat(kb.factors[0]), kb.factors[1]), cb);
        out.add_term(TensorKey<Forest>(kb.factors[0], a.concat(kb.factors[1])), cb);
    }
    if (left_flavour)
        out.add_term(TensorKey<Forest>(b, a), 1);
    else
        out.add_term(TensorKey<Forest>(a, b), 1);
    return out;
}

ForestTensor delta_pre_rec_impl(const Forest& f, bool split_first);

ForestTensor delta_suc_rec_impl(const Forest& f, bool split_first) {
    if (f.empty()) throw std::domain_error("delta_suc: empty forest");
    if (f.tree_count() == 1) {
        // Delta_suc(B+_d(G)) = (Id (x) B+_d) Delta_suc(G)
        const Tree& t = f.trees()[0];
        const Forest g(t.children());
        if (g.empty()) return {};
        return map_right_bplus(delta_suc_rec_impl(g, split_first), t.decoration());
    }
    const Forest a = split_first ? f.first_tree() : f.front_part();
    const Forest b = split_first ? f.rest() : f.last_tree();
    return half_cop_product_rule(a, b, reduced_coproduct(a), delta_suc_rec_impl(b, split_first),
                                 /*left_flavour=*/false);
}

ForestTensor delta_pre_rec_impl(const Forest& f, bool split_first) {
    if (f.empty()) throw std::domain_error("delta_pre: empty forest");
    if (f.tree_count() == 1) {
        // Delta_pre(B+_d(G)) = (Id (x) B+_d) Delta_pre(G) + G (x) 1_d
        const Tree& t = f.trees()[0];
        const Forest g(t.children());
        if (g.empty()) return {};
        ForestTensor out = map_right_bplus(delta_pre_rec_impl(g, split_first), t.decoration());
        out.add_term(TensorKey<Forest>(g, Forest(Tree(t.decoration()))), 1);
        return out;
    }
    const Forest a = split_first ? f.first_tree() : f.front_part();
    const Forest b = split_first ? f.rest() : f.last_tree();
    return half_cop_product_rule(a, b, reduced_coproduct(a), delta_pre_rec_impl(b, split_first),
                                 /*left_flavour=*/true);
}

}  // namespace

ForestTensor delta_pre_geometric(const Forest& f) {
    if (f.empty()) throw std::domain_error("delta_pre: empty forest");
    const auto rm_edges = rightmost_path_edges(f);
    const int last = f.tree_count() - 1;
    const bool multi = f.tree_count() > 1;
    ForestTensor r;
    for (const auto& ct : enumerate_cuts(f)) {
        const bool total_last = ct.cut.parts[last].kind == CutKind::Total;
        if (cut_meets_rightmost_path(ct, rm_edges, last) || (multi && total_last))
            r.add_term(TensorKey<Forest>(ct.pruned, ct.root), 1);
    }
    return r;
}

ForestTensor delta_pre_recursive(const Forest& f) { return delta_pre_rec_impl(f, true); }
ForestTensor delta_pre_recursive_alt(const Forest& f) { return delta_pre_rec_impl(f, false); }

ForestTensor delta_pre(const Forest& f) {
    static std::map<Forest, ForestTensor> cache;
    return cached(cache, f, [](const Forest& g) {
        ForestTensor r = delta_pre_recursive(g);
        assert(r == delta_pre_geometric(g));
        return r;
    });
}

ForestTensor delta_suc(const Forest& f) {
    static std::map<Forest, ForestTensor> cache;
    return cached(cache, f, [](const Forest& g) {
        ForestTensor r = delta_suc_rec_impl(g, true);
        assert(r == reduced_coproduct(g) - delta_pre_geometric(g));
        return r;
    });
}

ForestTensor delta_pre(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += delta_pre(f).scaled(c);
    return r;
}

ForestTensor delta_suc(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += delta_suc(f).scaled(c);
    return r;
}

ForestTensor delta_pre_prime(const Forest& f) {
    if (f.empty()) throw std::domain_error("delta_pre_prime: empty forest");
    ForestTensor r;
    if (f.tree_count() == 1) return r;
    const int last = f.tree_count() - 1;
    for (const auto& ct : enumerate_cuts(f))
        if (ct.cut.parts[last].kind == CutKind::Total)
            r.add_term(TensorKey<Forest>(ct.pruned, ct.root), 1);
    return r;
}

ForestTensor delta_suc_prime(const Forest& f) { return reduced_coproduct(f) - delta_pre_prime(f); }

ForestTensor delta_pre_prime(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += delta_pre_prime(f).scaled(c);
    return r;
}

ForestTensor delta_suc_prime(const ForestElem& x) {
    ForestTensor r;
    for (const auto& [f, c] : x) r += delta_suc_prime(f).scaled(c);
    return r;
}

ForestTensor iter_delta_pre(const ForestElem& x, int k) {
    if (k < 0) throw std::invalid_argument("iter_delta_pre: negative iterate");
    ForestTensor cur = as_tensor(x);
    for (int step = 0; step < k; ++step)
        cur = expand_factor(cur, 0, [](const Forest& f) { return f.empty() ? ForestTensor() : delta_pre(f); });
    return cur;
}

ForestTensor iter_delta_tilde(const ForestElem& x, int k) {
    if (k < 0) throw std::invalid_argument("iter_delta_tilde: negative iterate");
    ForestTensor cur = as_tensor(x);
    for (int step = 0; step < k; ++step) {
        const int last = step;  // rank before expansion is step+1
        cur = expand_factor(cur, last,
                            [](const Forest& f) { return f.empty() ? ForestTensor() : reduced_coproduct(f); });
    }
    return cur;
}

namespace {

const ForestElem& antipode_of(const Forest& f) {
    static std::map<Forest, ForestElem> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    ForestElem s;
    if (f.empty()) {
        s.add_term(f, 1);
    } else {
        s.add_term(f, -1);
        for (const auto& ct : enumerate_cuts(f)) s -= concat(antipode_of(ct.pruned), ForestElem::basis(ct.root));
    }
    return cache.emplace(f, std::move(s)).first->second;
}

}  // namespace

ForestElem antipode(const Forest& f) { return antipode_of(f); }

ForestElem antipode(const ForestElem& x) {
    ForestElem r;
    for (const auto& [f, c] : x) r += antipode_of(f).scaled(c);
    return r;
}

}  // namespace bidend
