#ifndef BIDEND_HCK_HPP
#define BIDEND_HCK_HPP

#include "bidend/forest.hpp"
#include "bidend/lincomb.hpp"

namespace bidend {

/*
 * Hopf structure on decorated planar forests: concatenation product,
 * admissible-cut coproduct, counit and antipode, plus the dendriform
 * half-coproducts.
 *
 * delta_pre / delta_suc are the half-coproducts that make the forest
 * algebra a bidendriform bialgebra (the single-vertex trees are totally
 * primitive).  delta_pre_prime / delta_suc_prime are the dual-flavoured
 * pair induced by self-duality; they split the same reduced coproduct but
 * are NOT bidendriform-compatible with the half-products (witness: the
 * two-vertex ladder d[d]).
 */

// Bilinear juxtaposition of forests.
ForestElem concat(const ForestElem& x, const ForestElem& y);

// Full coproduct, including the F (x) 1 and 1 (x) F terms.
ForestTensor coproduct(const Forest& f);
ForestTensor coproduct(const ForestElem& x);

ForestTensor reduced_coproduct(const Forest& f);
ForestTensor reduced_coproduct(const ForestElem& x);

Rational counit(const ForestElem& x);

// Left half-coproduct.  Evaluated by the recursive algorithm; debug builds
// cross-check the geometric cut-filter algorithm on every call.
ForestTensor delta_pre(const Forest& f);
ForestTensor delta_suc(const Forest& f);
ForestTensor delta_pre(const ForestElem& x);
ForestTensor delta_suc(const ForestElem& x);

// The two evaluation algorithms, exposed for tests.
ForestTensor delta_pre_geometric(const Forest& f);
ForestTensor delta_pre_recursive(const Forest& f);
// Recursion splitting off the last tree instead of the first.
ForestTensor delta_pre_recursive_alt(const Forest& f);

// Dual-flavoured half-coproducts: the left part keeps exactly the cuts
// whose last-tree component is the total cut (zero on single trees).
ForestTensor delta_pre_prime(const Forest& f);
ForestTensor delta_suc_prime(const Forest& f);
ForestTensor delta_pre_prime(const ForestElem& x);
ForestTensor delta_suc_prime(const ForestElem& x);

// k-fold iterates landing in rank k+1 tensors.
// iter_delta_pre expands the leftmost factor at each step,
// iter_delta_tilde the rightmost one.
ForestTensor iter_delta_pre(const ForestElem& x, int k);
ForestTensor iter_delta_tilde(const ForestElem& x, int k);

// Antipode of the graded connected Hopf algebra:
// S(1) = 1, S(F) = -F - sum S(F') F'' over the reduced coproduct.
ForestElem antipode(const ForestElem& x);
ForestElem antipode(const Forest& f);

}  // namespace bidend

#endif
