#include "bidend/iso.hpp"

#include <stdexcept>

#include "bidend/algebras.hpp"
#include "bidend/hck.hpp"
#include "bidend/series.hpp"

namespace bidend {

IsoWitness::IsoWitness(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 1) throw std::invalid_argument("IsoWitness: degree bound must be >= 1");
    FqsymAlgebra fq;
    for (int n = 1; n <= max_degree_; ++n) {
        const GradedSubspace<Perm> prim = prim_tot_basis(fq, n);
        const auto vectors = prim.vectors();
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const std::string label = "p" + std::to_string(n) + "_" + std::to_string(i + 1);
            decorations_.add(Decoration{label, n});
            assignment_.emplace(label, vectors[i]);
        }
    }
}

const FqElem& IsoWitness::primitive_of(const std::string& label) const {
    auto it = assignment_.find(label);
    if (it == assignment_.end()) throw std::domain_error("unknown decoration: " + label);
    return it->second;
}

FqElem IsoWitness::psi(const Forest& f) const {
    if (f.empty()) return FqElem::basis(Perm());
    auto it = cache_.find(f);
    if (it != cache_.end()) return it->second;
    FqElem out;
    if (f.tree_count() == 1) {
        const Tree& t = f.trees()[0];
        const FqElem& p = primitive_of(t.decoration().label);
        if (t.children().empty()) {
            out = p;
        } else {
            out = fqsym::prec(p, psi(Forest(t.children())));
        }
    } else {
        out = fqsym::product(psi(f.first_tree()), psi(f.rest()));
    }
    cache_.emplace(f, out);
    return out;
}

FqElem IsoWitness::psi(const ForestElem& x) const {
    FqElem r;
    for (const auto& [f, c] : x) r += psi(f).scaled(c);
    return r;
}

IsoReport verify_iso(int max_degree, int intertwine_to) {
    IsoWitness w(max_degree);
    IsoReport rep;
    rep.max_degree = max_degree;

    // counting audit: the forest series over this decoration profile must
    // reproduce n! degree by degree
    Series d(max_degree);
    for (int n = 1; n <= max_degree; ++n)
        d[n] = Rational(static_cast<long>(w.decorations().of_degree(n).size()));
    const Series r = r_from_d(d);
    rep.counting_ok = true;
    {
        Rational fact(1);
        for (int n = 1; n <= max_degree; ++n) {
            fact *= n;
            if (r[n] != fact) rep.counting_ok = false;
        }
    }

    for (int n = 1; n <= max_degree; ++n) {
        IsoDegreeReport dr;
        dr.degree = n;
        long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        dr.expected = fact;

        const std::vector<Forest> forests = enumerate_forests(w.decorations(), n);
        dr.forest_count = static_cast<long>(forests.size());

        const std::vector<Perm> perms = enumerate_perms(n);
        std::map<Perm, std::size_t> col;
        for (std::size_t j = 0; j < perms.size(); ++j) col.emplace(perms[j], j);
        Mat m(forests.size(), perms.size());
        for (std::size_t i = 0; i < forests.size(); ++i)
            for (const auto& [p, c] : w.psi(forests[i])) m.at(i, col.at(p)) = c;
        dr.rank = static_cast<long>(bareiss_rank(m));
        rep.degrees.push_back(dr);
    }

    // half-coproduct intertwining on every decorated forest of low degree
    const int bound = std::min(intertwine_to, max_degree);
    auto transport = [&](const ForestTensor& t) {
        FqTensor out;
        for (const auto& [k, c] : t) {
            const FqElem left = w.psi(k.factors[0]);
            const FqElem right = w.psi(k.factors[1]);
            for (const auto& [lp, lc] : left)
                for (const auto& [rp, rc] : right) out.add_term(TensorKey<Perm>(lp, rp), c * lc * rc);
        }
        return out;
    };
    rep.intertwining_degree = bound;
    for (int n = 1; n <= bound && rep.intertwining_ok; ++n) {
        for (const auto& f : enumerate_forests(w.decorations(), n)) {
            const FqElem img = w.psi(f);
            if (transport(delta_pre(f)) != fqsym::delta_pre(img) ||
                transport(delta_suc(f)) != fqsym::delta_suc(img)) {
                rep.intertwining_ok = false;
                rep.first_failure = f.str();
                break;
            }
        }
    }
    return rep;
}

}  // namespace bidend
