#ifndef BIDEND_FOREST_HPP
#define BIDEND_FOREST_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidend/lincomb.hpp"
#include "bidend/rational.hpp"

namespace bidend {

/*
 * Decorated planar rooted trees and forests.
 *
 * Child order is stored left-to-right and is significant (planarity is the
 * point).  The canonical text form is
 *
 *     forest := tree (' ' tree)*          |  "1" for the empty forest
 *     tree   := label ('[' tree (',' tree)* ']')?
 *
 * with children comma-separated left-to-right.  '*' is the default
 * decoration of degree 1.  Forests order by (degree, canonical encoding),
 * which makes every printed output reproducible.
 */

struct Decoration {
    std::string label;
    int degree = 1;

    bool operator==(const Decoration& o) const { return label == o.label && degree == o.degree; }
};

// Graded decoration alphabet: no degree-0 decorations, labels unique.
class DecorationSet {
public:
    DecorationSet() = default;
    explicit DecorationSet(std::vector<Decoration> decs);

    static DecorationSet single_default();  // just '*', degree 1

    void add(const Decoration& d);
    const std::vector<Decoration>& all() const { return decs_; }
    std::optional<Decoration> find(const std::string& label) const;
    std::vector<Decoration> of_degree(int n) const;
    bool empty() const { return decs_.empty(); }

private:
    std::vector<Decoration> decs_;
};

class Forest;

class Tree {
public:
    Tree(Decoration dec, std::vector<Tree> children);
    explicit Tree(Decoration dec) : Tree(std::move(dec), {}) {}

    const Decoration& decoration() const { return dec_; }
    const std::vector<Tree>& children() const { return children_; }
    int weight() const { return weight_; }    // number of vertices
    int degree() const { return degree_; }    // sum of decoration degrees
    const std::string& str() const { return code_; }

    bool operator==(const Tree& o) const { return code_ == o.code_; }
    bool operator<(const Tree& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return code_ < o.code_;
    }

private:
    Decoration dec_;
    std::vector<Tree> children_;
    int weight_;
    int degree_;
    std::string code_;
};

class Forest {
public:
    Forest() : weight_(0), degree_(0), code_("1") {}
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(Tree t) : Forest(std::vector<Tree>{std::move(t)}) {}

    const std::vector<Tree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    int tree_count() const { return static_cast<int>(trees_.size()); }
    int weight() const { return weight_; }
    int degree() const { return degree_; }
    int root_count() const { return tree_count(); }
    int leaf_count() const;
    const std::string& str() const { return code_; }

    Forest concat(const Forest& o) const;
    Forest first_tree() const;   // leading tree as a forest
    Forest rest() const;         // all but the first tree
    Forest front_part() const;   // all but the last tree
    Forest last_tree() const;    // trailing tree as a forest

    bool operator==(const Forest& o) const { return code_ == o.code_; }
    bool operator!=(const Forest& o) const { return !(*this == o); }
    bool operator<(const Forest& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return code_ < o.code_;
    }

private:
    std::vector<Tree> trees_;
    int weight_;
    int degree_;
    std::string code_;
};

using ForestElem = LinComb<Forest>;
using ForestTensor = LinComb<TensorKey<Forest>>;

// Grafting: hang the trees of F, in order, under a new root decorated d.
Tree b_plus(const Decoration& d, const Forest& f);

// A vertex named by (tree index, child path from that tree's root).
struct VertexPath {
    int tree = 0;
    std::vector<int> path;
    bool operator==(const VertexPath& o) const { return tree == o.tree && path == o.path; }
};

// The leaf reached from the root of the LAST tree by always descending to
// the planar-rightmost child.  Throws on the empty forest.
VertexPath rightmost_leaf(const Forest& f);
const Decoration& decoration_at(const Forest& f, const VertexPath& v);

// Right-leaf pruning: zero unless the rightmost leaf is decorated d, else
// the forest with that leaf removed (coefficient 1).
ForestElem xi(const Decoration& d, const Forest& f);

/*
 * Admissible cuts.  A cut assigns to each tree of the forest one of: the
 * empty cut, the total cut, or a nonempty edge set meeting every
 * root-to-leaf path at most once.  The all-empty and all-total cuts are
 * excluded from enumerate_cuts.
 */
enum class CutKind { Empty, Total, Edges };

struct TreeCut {
    CutKind kind = CutKind::Empty;
    std::vector<std::vector<int>> edges;  // child paths of severed edges
};

struct ForestCut {
    std::vector<TreeCut> parts;  // one per tree
};

struct CutTriple {
    ForestCut cut;
    Forest pruned;  // P^c: severed components, planar left-to-right, then tree order
    Forest root;    // R^c: what stays attached to the roots
};

std::vector<CutTriple> enumerate_cuts(const Forest& f);

// All decorated forests of total degree n, each once, in canonical order.
std::vector<Forest> enumerate_forests(const DecorationSet& d, int n);
std::vector<Forest> enumerate_trees(const DecorationSet& d, int n);

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::string message;  // without the offset suffix
    ParseError(std::size_t off, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(off) + ")"),
          offset(off),
          message(what) {}
};

// Parse the grammar above.  When a decoration set is supplied, labels are
// validated against it; otherwise any identifier is accepted with degree 1.
Forest parse_forest(const std::string& text, const DecorationSet* decorations = nullptr);

inline std::string render_forest(const Forest& f) { return f.str(); }

}  // namespace bidend

#endif
