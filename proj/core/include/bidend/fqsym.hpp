#ifndef BIDEND_FQSYM_HPP
#define BIDEND_FQSYM_HPP

#include <string>
#include <vector>

#include "bidend/lincomb.hpp"
#include "bidend/rational.hpp"

namespace bidend {

/*
 * The Malvenuto-Reutenauer algebra on the fundamental basis F_u indexed by
 * permutations: shuffle product, standardized-deconcatenation coproduct,
 * their dendriform halves, and the diagonal duality pairing
 * <F_u, F_v> = [v = u^{-1}].
 *
 * Text form: compact digits "231" for n <= 9, bracketed "[10,2,...]"
 * otherwise; the empty permutation prints as "e".
 */
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> word);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    int degree() const { return size(); }
    bool empty() const { return word_.empty(); }

    Perm inverse() const;
    std::string str() const;

    bool operator==(const Perm& o) const { return word_ == o.word_; }
    bool operator<(const Perm& o) const {
        if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
        return word_ < o.word_;
    }

private:
    std::vector<int> word_;
};

using FqElem = LinComb<Perm>;
using FqTensor = LinComb<TensorKey<Perm>>;

// The unique permutation with the same relative order of letters.
// Letters must be pairwise distinct.
Perm standardize(const std::vector<int>& word);

// All permutations of {1..n} in lexicographic word order.
std::vector<Perm> enumerate_perms(int n);

namespace fqsym {

// Shuffle product: left block carries the letters of u, right block the
// letters of v shifted by |u|; one term per choice of left-block positions.
FqElem product(const Perm& u, const Perm& v);
// Sub-sums over shuffles whose last position comes from the left (prec)
// respectively right (succ) block; prec + succ = product.
FqElem prec(const Perm& u, const Perm& v);
FqElem succ(const Perm& u, const Perm& v);

FqElem product(const FqElem& x, const FqElem& y);
FqElem prec(const FqElem& x, const FqElem& y);
FqElem succ(const FqElem& x, const FqElem& y);

// Full coproduct (cut points 0..n), reduced part (1..n-1), and the halves:
// delta_pre cuts from the position of the maximal letter through n-1,
// delta_suc earlier.
FqTensor coproduct(const Perm& u);
FqTensor reduced_coproduct(const Perm& u);
FqTensor delta_pre(const Perm& u);
FqTensor delta_suc(const Perm& u);
FqTensor coproduct(const FqElem& x);
FqTensor reduced_coproduct(const FqElem& x);
FqTensor delta_pre(const FqElem& x);
FqTensor delta_suc(const FqElem& x);

Rational dual_pairing(const Perm& u, const Perm& v);
Rational dual_pairing(const FqElem& x, const FqElem& y);
Rational dual_pairing_tensor(const FqTensor& x, const FqTensor& y);

}  // namespace fqsym

}  // namespace bidend

#endif
