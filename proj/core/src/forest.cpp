#include "bidend/forest.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace bidend {

DecorationSet::DecorationSet(std::vector<Decoration> decs) {
    for (auto& d : decs) add(d);
}

DecorationSet DecorationSet::single_default() {
    DecorationSet s;
    s.add({"*", 1});
    return s;
}

void DecorationSet::add(const Decoration& d) {
    if (d.degree < 1) throw std::invalid_argument("decoration degree must be >= 1: " + d.label);
    for (const auto& e : decs_)
        if (e.label == d.label) throw std::invalid_argument("duplicate decoration label: " + d.label);
    decs_.push_back(d);
}

std::optional<Decoration> DecorationSet::find(const std::string& label) const {
    for (const auto& d : decs_)
        if (d.label == label) return d;
    return std::nullopt;
}

std::vector<Decoration> DecorationSet::of_degree(int n) const {
    std::vector<Decoration> out;
    for (const auto& d : decs_)
        if (d.degree == n) out.push_back(d);
    return out;
}

Tree::Tree(Decoration dec, std::vector<Tree> children)
    : dec_(std::move(dec)), children_(std::move(children)) {
    weight_ = 1;
    degree_ = dec_.degree;
    code_ = dec_.label;
    if (!children_.empty()) {
        code_ += '[';
        for (std::size_t i = 0; i < children_.size(); ++i) {
            if (i) code_ += ',';
            code_ += children_[i].str();
            weight_ += children_[i].weight();
            degree_ += children_[i].degree();
        }
        code_ += ']';
    }
}

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    weight_ = 0;
    degree_ = 0;
    if (trees_.empty()) {
        code_ = "1";
        return;
    }
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i) code_ += ' ';
        code_ += trees_[i].str();
        weight_ += trees_[i].weight();
        degree_ += trees_[i].degree();
    }
}

int Forest::leaf_count() const {
    int n = 0;
    struct V {
        static void visit(const Tree& t, int& n) {
            if (t.children().empty()) ++n;
            for (const auto& c : t.children()) visit(c, n);
        }
    };
    for (const auto& t : trees_) V::visit(t, n);
    return n;
}

Forest Forest::concat(const Forest& o) const {
    std::vector<Tree> ts = trees_;
    ts.insert(ts.end(), o.trees_.begin(), o.trees_.end());
    return Forest(std::move(ts));
}

Forest Forest::first_tree() const {
    if (empty()) throw std::domain_error("first_tree: empty forest");
    return Forest(trees_.front());
}

Forest Forest::rest() const {
    if (empty()) throw std::domain_error("rest: empty forest");
    return Forest(std::vector<Tree>(trees_.begin() + 1, trees_.end()));
}

Forest Forest::front_part() const {
    if (empty()) throw std::domain_error("front_part: empty forest");
    return Forest(std::vector<Tree>(trees_.begin(), trees_.end() - 1));
}

Forest Forest::last_tree() const {
    if (empty()) throw std::domain_error("last_tree: empty forest");
    return Forest(trees_.back());
}

Tree b_plus(const Decoration& d, const Forest& f) { return Tree(d, f.trees()); }

VertexPath rightmost_leaf(const Forest& f) {
    if (f.empty()) throw std::domain_error("rightmost_leaf: empty forest");
    VertexPath v;
    v.tree = f.tree_count() - 1;
    const Tree* cur = &f.trees().back();
    while (!cur->children().empty()) {
        const int j = static_cast<int>(cur->children().size()) - 1;
        v.path.push_back(j);
        cur = &cur->children()[j];
    }
    return v;
}

const Decoration& decoration_at(const Forest& f, const VertexPath& v) {
    const Tree* cur = &f.trees().at(v.tree);
    for (int j : v.path) cur = &cur->children().at(j);
    return cur->decoration();
}

namespace {

// Remove the rightmost leaf of t; returns (leaf decoration, remainder or
// nullopt when t was that single leaf).
std::pair<Decoration, std::optional<Tree>> strip_rightmost(const Tree& t) {
    if (t.children().empty()) return {t.decoration(), std::nullopt};
    std::vector<Tree> kids = t.children();
    auto [leaf, sub] = strip_rightmost(kids.back());
    if (sub)
        kids.back() = *sub;
    else
        kids.pop_back();
    return {leaf, Tree(t.decoration(), std::move(kids))};
}

}  // namespace

ForestElem xi(const Decoration& d, const Forest& f) {
    if (f.empty()) throw std::domain_error("xi: empty forest");
    std::vector<Tree> ts = f.trees();
    auto [leaf, sub] = strip_rightmost(ts.back());
    if (!(leaf == d)) return {};
    if (sub)
        ts.back() = *sub;
    else
        ts.pop_back();
    return ForestElem::basis(Forest(std::move(ts)));
}

namespace {

struct TreeOption {
    CutKind kind;
    std::vector<std::vector<int>> edges;  // paths relative to the tree root
    std::vector<Tree> pruned;             // severed components, planar order
    std::optional<Tree> root;             // nullopt for the total cut
};

// Antichain edge cuts inside t (the edge above t not available), including
// the empty cut.  Pruned components come out in planar left-to-right order:
// children are processed left to right and a severed subtree appears where
// its root sits in the drawing.
std::vector<TreeOption> internal_options(const Tree& t, const std::vector<int>& path) {
    struct Partial {
        std::vector<std::vector<int>> edges;
        std::vector<Tree> pruned;
        std::vector<Tree> kept;
    };
    std::vector<Partial> acc{Partial{}};
    const auto& kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        std::vector<int> cpath = path;
        cpath.push_back(static_cast<int>(i));
        std::vector<Partial> alts;
        {
            Partial cut_here;
            cut_here.edges.push_back(cpath);
            cut_here.pruned.push_back(kids[i]);
            alts.push_back(std::move(cut_here));
        }
        for (const auto& opt : internal_options(kids[i], cpath)) {
            Partial keep;
            keep.edges = opt.edges;
            keep.pruned = opt.pruned;
            keep.kept.push_back(*opt.root);
            alts.push_back(std::move(keep));
        }
        std::vector<Partial> next;
        next.reserve(acc.size() * alts.size());
        for (const auto& a : acc)
            for (const auto& b : alts) {
                Partial p = a;
                p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
                p.pruned.insert(p.pruned.end(), b.pruned.begin(), b.pruned.end());
                p.kept.insert(p.kept.end(), b.kept.begin(), b.kept.end());
                next.push_back(std::move(p));
            }
        acc = std::move(next);
    }
    std::vector<TreeOption> out;
    out.reserve(acc.size());
    for (auto& p : acc) {
        TreeOption o;
        o.kind = p.edges.empty() ? CutKind::Empty : CutKind::Edges;
        o.edges = std::move(p.edges);
        o.pruned = std::move(p.pruned);
        o.root = Tree(t.decoration(), std::move(p.kept));
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<TreeOption> tree_options(const Tree& t) {
    std::vector<TreeOption> out = internal_options(t, {});
    TreeOption total;
    total.kind = CutKind::Total;
    total.pruned.push_back(t);
    total.root = std::nullopt;
    out.push_back(std::move(total));
    return out;
}

}  // namespace

std::vector<CutTriple> enumerate_cuts(const Forest& f) {
    if (f.empty()) return {};
    std::vector<std::vector<TreeOption>> per_tree;
    per_tree.reserve(f.trees().size());
    for (const auto& t : f.trees()) per_tree.push_back(tree_options(t));

    std::vector<CutTriple> out;
    std::vector<std::size_t> choice(f.trees().size(), 0);
    while (true) {
        bool all_empty = true, all_total = true;
        for (std::size_t i = 0; i < choice.size(); ++i) {
            const CutKind k = per_tree[i][choice[i]].kind;
            all_empty = all_empty && k == CutKind::Empty;
            all_total = all_total && k == CutKind::Total;
        }
        if (!all_empty && !all_total) {
            CutTriple ct;
            std::vector<Tree> pruned, root;
            for (std::size_t i = 0; i < choice.size(); ++i) {
                const TreeOption& o = per_tree[i][choice[i]];
                TreeCut tc;
                tc.kind = o.kind;
                tc.edges = o.edges;
                ct.cut.parts.push_back(std::move(tc));
                pruned.insert(pruned.end(), o.pruned.begin(), o.pruned.end());
                if (o.root) root.push_back(*o.root);
            }
            ct.pruned = Forest(std::move(pruned));
            ct.root = Forest(std::move(root));
            out.push_back(std::move(ct));
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < per_tree[i].size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    return out;
}

namespace {

void forests_upto(const DecorationSet& d, int n, std::vector<std::vector<Forest>>& forests,
                  std::vector<std::vector<Tree>>& trees) {
    // forests[k], trees[k] filled for 0..n by mutual recursion on degree
    forests.assign(n + 1, {});
    trees.assign(n + 1, {});
    forests[0].push_back(Forest());
    for (int k = 1; k <= n; ++k) {
        for (const auto& dec : d.all()) {
            if (dec.degree > k) continue;
            for (const auto& sub : forests[k - dec.degree])
                trees[k].push_back(b_plus(dec, sub));
        }
        for (int fw = 1; fw <= k; ++fw)
            for (const auto& t : trees[fw])
                for (const auto& restf : forests[k - fw]) {
                    std::vector<Tree> ts;
                    ts.reserve(1 + restf.trees().size());
                    ts.push_back(t);
                    ts.insert(ts.end(), restf.trees().begin(), restf.trees().end());
                    forests[k].push_back(Forest(std::move(ts)));
                }
    }
}

}  // namespace

std::vector<Forest> enumerate_forests(const DecorationSet& d, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_forests: negative degree");
    std::vector<std::vector<Forest>> forests;
    std::vector<std::vector<Tree>> trees;
    forests_upto(d, n, forests, trees);
    std::vector<Forest> out = forests[n];
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Forest> enumerate_trees(const DecorationSet& d, int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: degree must be >= 1");
    std::vector<std::vector<Forest>> forests;
    std::vector<std::vector<Tree>> trees;
    forests_upto(d, n, forests, trees);
    std::vector<Forest> out;
    out.reserve(trees[n].size());
    for (const auto& t : trees[n]) out.push_back(Forest(t));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const DecorationSet* decs;

    explicit Parser(const std::string& text, const DecorationSet* d) : s(text), decs(d) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    static bool label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '*'; }
    static bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    Decoration parse_label() {
        if (eof() || !label_start(peek())) fail("expected decoration label");
        std::size_t start = pos;
        if (peek() == '*') {
            ++pos;
        } else {
            ++pos;
            while (!eof() && label_char(peek())) ++pos;
        }
        const std::string label = s.substr(start, pos - start);
        if (decs) {
            auto d = decs->find(label);
            if (!d) {
                pos = start;
                fail("unknown decoration label '" + label + "'");
            }
            return *d;
        }
        return Decoration{label, 1};
    }

    Tree parse_tree() {
        Decoration dec = parse_label();
        std::vector<Tree> kids;
        if (!eof() && peek() == '[') {
            ++pos;
            kids.push_back(parse_tree());
            while (!eof() && peek() == ',') {
                ++pos;
                kids.push_back(parse_tree());
            }
            if (eof() || peek() != ']') fail("expected ']' or ','");
            ++pos;
        }
        return Tree(std::move(dec), std::move(kids));
    }

    Forest parse() {
        if (s == "1") return Forest();
        std::vector<Tree> trees;
        trees.push_back(parse_tree());
        while (!eof() && peek() == ' ') {
            ++pos;
            trees.push_back(parse_tree());
        }
        if (!eof()) fail("trailing input");
        return Forest(std::move(trees));
    }
};

}  // namespace

Forest parse_forest(const std::string& text, const DecorationSet* decorations) {
    Parser p(text, decorations);
    return p.parse();
}

}  // namespace bidend
