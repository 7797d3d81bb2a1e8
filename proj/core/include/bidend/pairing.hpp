#ifndef BIDEND_PAIRING_HPP
#define BIDEND_PAIRING_HPP

#include <vector>

#include "bidend/forest.hpp"
#include "bidend/matrix.hpp"

namespace bidend {

/*
 * The bidendriform pairing on decorated forests.  It is computed by
 * recursion on the left argument:
 *
 *   <1, y>        = counit(y)
 *   <B+_d(x), y>  = <x, xi_d(y)>
 *   <x y, z>      = <x (x) y, Delta(z)>
 *
 * and admits an order-counting interpretation: <F, G> is the number of
 * bijections vert(F) -> vert(G) that transport the descendant order of F
 * into the depth-left total order of G (and back), preserving decorations.
 * Both evaluations are exposed; they must agree everywhere.
 */

Rational pair_forests(const Forest& f, const Forest& g);
Rational pair_forests(const ForestElem& x, const ForestElem& y);
Rational pair_tensor(const ForestTensor& x, const ForestTensor& y);
// Same recursion, splitting the left argument as (all-but-last)(last).
Rational pair_forests_alt_split(const Forest& f, const Forest& g);

// Vertex order data of a forest: the descendant partial order >=_high and
// the total order >=_dl ("x above y, or x further left").
class VertexOrders {
public:
    explicit VertexOrders(const Forest& f);

    int count() const { return static_cast<int>(pre_.size()); }
    const std::string& decoration(int v) const { return label_[v]; }
    // strict descendant: v lies above w (path from w up to v)
    bool higher(int v, int w) const { return v != w && pre_[w] < pre_[v] && post_[v] <= post_[w]; }
    // total order (reflexive)
    bool dl_ge(int v, int w) const {
        if (v == w) return true;
        if (higher(w, v)) return true;   // v is an ancestor of w
        if (higher(v, w)) return false;
        return pre_[v] < pre_[w];        // incomparable: leftmost wins
    }
    // sanity: every distinct pair comparable exactly one way; >=_dl total
    bool check_invariants() const;

private:
    std::vector<int> pre_, post_;
    std::vector<std::string> label_;
};

// Brute-force bijection count card I(F,G).  Forest weight is capped at 9
// vertices to keep the factorial enumeration honest; beyond the cap this
// throws std::domain_error.
Rational pair_oracle(const Forest& f, const Forest& g, int vertex_cap = 9);

struct GramMatrix {
    int degree = 0;
    std::vector<Forest> basis;
    Mat values;
};

// Full pairwise table at degree n; asserts symmetry.
GramMatrix gram(const DecorationSet& d, int n);

// The linear tree with k vertices over the default decoration.
Forest ladder(int k);

void clear_pairing_cache();

}  // namespace bidend

#endif
