#ifndef BIDEND_ISO_HPP
#define BIDEND_ISO_HPP

#include <map>
#include <string>
#include <vector>

#include "bidend/fqsym.hpp"
#include "bidend/forest.hpp"
#include "bidend/prim.hpp"

namespace bidend {

/*
 * The constructive graded isomorphism from decorated forests onto the
 * permutation algebra: pick one decoration per totally-primitive basis
 * vector (|D_n| = p_n), send the single-vertex tree 1_d to that vector, and
 * extend multiplicatively and dendriformly:
 *
 *     psi(t_1 ... t_m) = psi(t_1) ... psi(t_m)      (shuffle product)
 *     psi(B+_d(F))     = p_d < psi(F)               (left half-product)
 *
 * Bijectivity is certified degree by degree through exact rank n! of the
 * transition matrix, and the bidendriform-morphism laws are checked by
 * transporting half-coproducts through psi.
 */
class IsoWitness {
public:
    // Decorations "p<n>_<i>" of degree n, one per echelon basis vector of
    // the degree-n totally primitive subspace, for n <= max_degree.
    explicit IsoWitness(int max_degree);

    const DecorationSet& decorations() const { return decorations_; }
    int max_degree() const { return max_degree_; }
    const FqElem& primitive_of(const std::string& label) const;

    FqElem psi(const Forest& f) const;
    FqElem psi(const ForestElem& x) const;

private:
    int max_degree_;
    DecorationSet decorations_;
    std::map<std::string, FqElem> assignment_;
    mutable std::map<Forest, FqElem> cache_;
};

struct IsoDegreeReport {
    int degree = 0;
    long forest_count = 0;
    long expected = 0;  // n!
    long rank = 0;
    bool ok() const { return forest_count == expected && rank == expected; }
};

struct IsoReport {
    int max_degree = 0;
    std::vector<IsoDegreeReport> degrees;
    bool counting_ok = false;       // forest generating series reproduces n!
    bool intertwining_ok = true;    // (psi x psi) o cop_half = cop_half o psi
    int intertwining_degree = 0;
    std::string first_failure;

    bool ok() const {
        if (!counting_ok || !intertwining_ok) return false;
        for (const auto& d : degrees)
            if (!d.ok()) return false;
        return true;
    }
};

// Per-degree counts and exact ranks up to max_degree, the series audit, and
// half-coproduct intertwining on all forests of degree <= intertwine_to.
IsoReport verify_iso(int max_degree, int intertwine_to = 4);

}  // namespace bidend

#endif
