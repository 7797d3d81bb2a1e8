#ifndef BIDEND_HALFPROD_HPP
#define BIDEND_HALFPROD_HPP

#include <map>
#include <memory>
#include <vector>

#include "bidend/forest.hpp"
#include "bidend/matrix.hpp"
#include "bidend/pairing.hpp"

namespace bidend {

/*
 * Reconstruction of the dendriform half-products on decorated forests as
 * the adjoints of the half-coproducts under the bidendriform pairing:
 * F < G is the unique element X of degree |F|+|G| with
 *
 *     <X, H> = sum over Delta_pre(H) = sum P (x) R of <F, P> <G, R>
 *
 * for every basis forest H of that degree (> uses Delta_suc).  Each degree
 * shares one Gram matrix and its factorization; solves are exact.
 */
class HalfProductTable {
public:
    HalfProductTable(DecorationSet d, int max_degree);

    const DecorationSet& decorations() const { return decorations_; }
    int max_degree() const { return max_degree_; }

    // F < G and F > G; throws std::domain_error past the degree bound and
    // on empty factors.
    ForestElem prec(const Forest& f, const Forest& g);
    ForestElem succ(const Forest& f, const Forest& g);
    ForestElem prec(const ForestElem& x, const ForestElem& y);
    ForestElem succ(const ForestElem& x, const ForestElem& y);
    ForestElem mul(const ForestElem& x, const ForestElem& y);  // concatenation

    // Precompute every pair with |F| + |G| <= max_degree.
    void build_all();

    const std::vector<Forest>& basis(int n);
    const GramMatrix& gram_at(int n);

    // Every (F, G, F<G, F>G) with both halves already computed.
    struct Entry {
        Forest left, right;
        ForestElem prec, succ;
    };
    std::vector<Entry> entries() const;

private:
    ForestElem solve_half(const Forest& f, const Forest& g, bool left);
    void ensure_degree(int n);

    DecorationSet decorations_;
    int max_degree_;
    std::map<int, GramMatrix> grams_;
    std::map<int, Mat> gram_inverse_;
    std::map<std::pair<std::string, std::string>, ForestElem> prec_cache_;
    std::map<std::pair<std::string, std::string>, ForestElem> succ_cache_;
};

}  // namespace bidend

#endif
