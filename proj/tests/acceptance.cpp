// Acceptance suite: one check per release criterion, every comparison an
// exact equality.  Run with no arguments for all criteria, with numbers to
// select, and --deep for the degree-6 kernel computation (slower).

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>
#include <vector>

#include "bidend/expr.hpp"
#include "bidend/golden.hpp"
#include "bidend/hck.hpp"
#include "bidend/iso.hpp"
#include "bidend/laws.hpp"
#include "bidend/pairing.hpp"
#include "bidend/prim.hpp"
#include "bidend/series.hpp"

#ifndef BIDEND_GOLDEN_DIR
#define BIDEND_GOLDEN_DIR "tests/golden"
#endif

using namespace bidend;

namespace {

bool g_deep = false;

const DecorationSet& star() {
    static const DecorationSet d = DecorationSet::single_default();
    return d;
}

bool golden_pass(const std::string& name, std::string& detail) {
    const GoldenResult r = run_golden_file(std::string(BIDEND_GOLDEN_DIR) + "/" + name);
    for (const auto& m : r.mismatches) detail += "\n      " + m;
    return r.passed() && r.checks > 0;
}

// 1. the four coproducts of the five-vertex reference forest
bool criterion_golden_coproducts(std::string& detail) {
    return golden_pass("forest_coproducts.txt", detail);
}

// 2. pairing tables of weight 1..4, by recursion and by bijection count
bool criterion_pairing_tables(std::string& detail) {
    bool ok = true;
    for (const std::string f :
         {"pairing_table_w1.tsv", "pairing_table_w2.tsv", "pairing_table_w3.tsv", "pairing_table_w4.tsv"})
        ok = golden_pass(f, detail) && ok;
    return ok;
}

// 3. ladder identities through weight 6
bool criterion_ladders(std::string& detail) {
    const Forest one = parse_forest("*");
    for (int n = 1; n <= 6; ++n) {
        const Forest ln = ladder(n);
        const Forest roots_probe = ladder(n - 1).concat(one);
        const Forest leaves_probe = one.concat(ladder(n - 1));
        for (const auto& f : enumerate_forests(star(), n)) {
            if (pair_forests(f, ln) != 1 || pair_forests(f, roots_probe) != f.root_count() ||
                pair_forests(f, leaves_probe) != f.leaf_count()) {
                detail = "fails at " + f.str();
                return false;
            }
        }
    }
    return true;
}

// 4. recursion vs bijection count: exhaustive to weight 4, seeded at 5-6
bool criterion_oracle_equivalence(std::string& detail) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : enumerate_forests(star(), n))
            for (const auto& b : enumerate_forests(star(), n))
                if (pair_forests(a, b) != pair_oracle(a, b)) {
                    detail = "<" + a.str() + ", " + b.str() + ">";
                    return false;
                }
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 5 + trial % 2;
        const auto basis = enumerate_forests(star(), n);
        std::uniform_int_distribution<std::size_t> d(0, basis.size() - 1);
        const Forest& a = basis[d(rng)];
        const Forest& b = basis[d(rng)];
        if (pair_forests(a, b) != pair_oracle(a, b)) {
            detail = "<" + a.str() + ", " + b.str() + ">";
            return false;
        }
    }
    return true;
}

// 5. nondegeneracy of the pairing through degree 5
bool criterion_nondegenerate(std::string& detail) {
    for (int n = 1; n <= 5; ++n) {
        const GramMatrix gm = gram(star(), n);
        if (is_zero(bareiss_det(gm.values))) {
            detail = "degree " + std::to_string(n);
            return false;
        }
    }
    return true;
}

// 6. permutation-algebra reference computations
bool criterion_fqsym_golden(std::string& detail) { return golden_pass("fqsym_examples.txt", detail); }

// 7. axiom suites, including the dual-flavoured failure witness
bool criterion_axiom_suites(std::string& detail) {
    SuiteConfig cfg;
    cfg.max_degree = 6;
    cfg.exhaustive_to = 4;
    cfg.samples = 500;
    cfg.seed = 1;
    for (const std::string suite : {"dendriform", "codendriform", "bidendriform"}) {
        const LawReport rep = run_suite(suite, "fqsym", cfg);
        if (!rep.passed()) {
            detail = suite + " on fqsym: " + rep.failures.front().law;
            return false;
        }
    }
    SuiteConfig prime_cfg;
    prime_cfg.max_degree = 4;
    prime_cfg.exhaustive_to = 4;
    prime_cfg.samples = 100;
    if (!run_suite("codendriform", "hck-dualprime", prime_cfg).passed()) {
        detail = "codendriform fails on the dual-flavoured coproducts";
        return false;
    }
    if (!run_suite("codend-bialgebra", "hck-dualprime", prime_cfg).passed()) {
        detail = "codend-bialgebra fails on the dual-flavoured coproducts";
        return false;
    }
    const LawReport rep = run_suite("bidendriform", "hck-dualprime", prime_cfg);
    if (rep.passed()) {
        detail = "bidendriform unexpectedly passes on the dual-flavoured coproducts";
        return false;
    }
    for (const auto& f : rep.failures)
        if (f.law == "copl-of-prec" && f.inputs == "* # *" && f.lhs == "0" && f.rhs == "1*(* # *)")
            return true;
    detail = "two-vertex ladder witness not reported";
    return false;
}

// 8. half-product reconstruction
bool criterion_halfprod(std::string& detail) {
    HalfProductTable table(star(), 5);
    const Forest one = parse_forest("*");
    const Decoration d{"*", 1};
    for (int n = 1; n <= 4; ++n)
        for (const auto& x : enumerate_forests(star(), n))
            if (table.prec(one, x) != ForestElem::basis(Forest(b_plus(d, x)))) {
                detail = "grafting mismatch at " + x.str();
                return false;
            }
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; i + j <= 5; ++j)
            for (const auto& a : enumerate_forests(star(), i))
                for (const auto& b : enumerate_forests(star(), j))
                    if (table.prec(a, b) + table.succ(a, b) != ForestElem::basis(a.concat(b))) {
                        detail = "halves do not sum to concatenation at " + a.str() + ", " + b.str();
                        return false;
                    }
    SuiteConfig cfg;
    cfg.max_degree = 5;
    cfg.exhaustive_to = 5;
    cfg.samples = 0;
    for (const std::string suite : {"dendriform", "codendriform", "bidendriform"}) {
        const LawReport rep = run_suite(suite, "hck", cfg);
        if (!rep.passed()) {
            detail = suite + ": " + rep.failures.front().law + " at " + rep.failures.front().inputs;
            return false;
        }
    }
    return true;
}

// 9. eulerian projections on the permutation algebra
bool criterion_projections(std::string& detail) {
    FqsymAlgebra alg;
    for (int n = 1; n <= 4; ++n) {
        const auto kernel = prim_tot_basis(alg, n);
        std::vector<std::vector<Rational>> image_rows;
        const auto span = n >= 2 ? half_product_span(alg, n) : GradedSubspace<Perm>{};
        for (const auto& u : alg.basis(n)) {
            const FqElem x = FqElem::basis(u);
            const FqElem tx = t_total(alg, x);
            if (t_total(alg, tx) != tx) {
                detail = "not idempotent at " + u.str();
                return false;
            }
            if (!alg_delta_pre(alg, tx).is_zero() || !alg_delta_suc(alg, tx).is_zero()) {
                detail = "image not totally primitive at " + u.str();
                return false;
            }
            if (!tx.is_zero()) image_rows.push_back(kernel.coords(tx));
            const FqElem defect = x - t1(alg, x);
            if (!defect.is_zero() && (n < 2 || !span.contains(defect))) {
                detail = "defect outside the half-product span at " + u.str();
                return false;
            }
        }
        if (!same_row_space(image_rows, kernel.rows, kernel.basis.size())) {
            detail = "image span differs from the kernel at degree " + std::to_string(n);
            return false;
        }
    }
    return true;
}

// 10. the dimension ladder
bool criterion_dimension_ladder(std::string& detail) {
    FqsymAlgebra alg;
    Series r(12);
    Rational fact(1);
    for (int n = 1; n <= 12; ++n) {
        fact *= n;
        r[n] = fact;
    }
    const Series p = p_from_r(r);
    const std::vector<long> row = {1, 0, 1, 6, 39, 284, 2305, 20682, 203651, 2186744, 25463925, 319989030};
    for (int n = 1; n <= 12; ++n)
        if (p[n] != row[n - 1]) {
            detail = "series coefficient " + std::to_string(n);
            return false;
        }
    const int kernel_to = g_deep ? 6 : 5;
    for (int n = 1; n <= kernel_to; ++n)
        if (prim_tot_basis(alg, n).dim() != row[n - 1]) {
            detail = "kernel dimension at degree " + std::to_string(n);
            return false;
        }
    if (!g_deep) detail = "(kernel checked to degree 5; --deep adds degree 6)";
    return true;
}

// 11. the six degree-4 primitives lie in the kernel and span it
bool criterion_degree4_primitives(std::string& detail) {
    FqsymAlgebra alg;
    const auto kernel = prim_tot_basis(alg, 4);
    const std::vector<std::string> vectors = {
        "3142 - 2143", "2431 - 1432", "2341 - 1342", "1243 - 1342 - 2143 + 3241",
        "3412 - 2413", "1423 - 2413 - 1432 + 3421"};
    std::vector<std::vector<Rational>> rows;
    for (const auto& text : vectors) {
        const FqElem v = parse_perm_expr(text);
        if (!kernel.contains(v)) {
            detail = text + " not in the kernel";
            return false;
        }
        rows.push_back(kernel.coords(v));
    }
    if (!same_row_space(rows, kernel.rows, kernel.basis.size())) {
        detail = "the six vectors do not span";
        return false;
    }
    return true;
}

// 12. the isomorphism at scale 5
bool criterion_iso(std::string& detail) {
    const IsoReport rep = verify_iso(5, 4);
    if (!rep.ok()) {
        detail = rep.intertwining_ok ? "rank or counting mismatch" : "intertwining fails at " + rep.first_failure;
        return false;
    }
    return true;
}

// 13. series sanity
bool criterion_series(std::string& detail) {
    Series d(12);
    d[1] = 1;
    const Series r = r_from_d(d);
    const std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n)
        if (r[n] != catalan[n]) {
            detail = "catalan coefficient " + std::to_string(n);
            return false;
        }
    for (int n = 1; n <= 7; ++n)
        if (r[n] != static_cast<long>(enumerate_forests(star(), n).size())) {
            detail = "count mismatch at degree " + std::to_string(n);
            return false;
        }
    Series r_plus = r;
    r_plus[0] = 0;
    const Series p = p_from_r(r_plus);
    if (p[1] != 1) {
        detail = "p[1]";
        return false;
    }
    for (int n = 2; n <= 12; ++n)
        if (!is_zero(p[n])) {
            detail = "p[" + std::to_string(n) + "] nonzero";
            return false;
        }
    return true;
}

// 14. the antipode identity and its self-adjointness for the pairing
bool criterion_antipode(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        const auto basis = enumerate_forests(star(), n);
        for (const auto& f : basis) {
            ForestElem acc;
            for (const auto& [k, c] : coproduct(f))
                acc += concat(antipode(k.factors[0]), ForestElem::basis(k.factors[1])).scaled(c);
            if (!acc.is_zero()) {
                detail = "hopf identity fails at " + f.str();
                return false;
            }
        }
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (pair_forests(antipode(a), ForestElem::basis(b)) !=
                    pair_forests(ForestElem::basis(a), antipode(b))) {
                    detail = "self-adjointness fails at <" + a.str() + ", " + b.str() + ">";
                    return false;
                }
    }
    return true;
}

struct Criterion {
    int number;
    const char* description;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "reference coproducts of a b[c[e,d]], term for term", criterion_golden_coproducts},
    {2, "pairing tables at weight 1-4 by both algorithms", criterion_pairing_tables},
    {3, "ladder pairing identities through weight 6", criterion_ladders},
    {4, "pairing recursion equals the bijection count", criterion_oracle_equivalence},
    {5, "Gram determinants nonzero through degree 5", criterion_nondegenerate},
    {6, "permutation-algebra reference computations", criterion_fqsym_golden},
    {7, "axiom suites incl. the dual-coproduct failure witness", criterion_axiom_suites},
    {8, "half-product reconstruction and its axioms", criterion_halfprod},
    {9, "eulerian projections: idempotents onto the kernel", criterion_projections},
    {10, "totally-primitive dimension ladder", criterion_dimension_ladder},
    {11, "the six degree-4 primitives span the kernel", criterion_degree4_primitives},
    {12, "forest-to-permutation isomorphism at degree 5", criterion_iso},
    {13, "enumerative series sanity", criterion_series},
    {14, "antipode identity and pairing self-adjointness", criterion_antipode},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--deep") == 0)
            g_deep = true;
        else
            selected.insert(std::atoi(argv[i]));
    }
    bool all_ok = true;
    for (const auto& c : kCriteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        std::string detail;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.description
                  << " (" << ms << " ms)";
        if (!detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
