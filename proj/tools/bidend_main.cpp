// bidend: exact computations in the dendriform world of planar decorated
// forests and permutations.  Every verb routes to pure library functions;
// output is deterministic for fixed inputs and seeds.
//
// Exit status: 0 success, 1 verification failure, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "bidend/expr.hpp"
#include "bidend/golden.hpp"
#include "bidend/hck.hpp"
#include "bidend/iso.hpp"
#include "bidend/laws.hpp"
#include "bidend/pairing.hpp"
#include "bidend/prim.hpp"
#include "bidend/series.hpp"

using namespace bidend;
using nlohmann::json;

namespace {

struct GlobalOpts {
    std::string decorations;
    int max_degree = 5;
    std::uint64_t seed = 1;
    std::string format = "text";
};

std::optional<DecorationSet> decoration_set(const GlobalOpts& g) {
    if (g.decorations.empty()) return std::nullopt;
    DecorationSet d;
    for (std::size_t pos = 0; pos < g.decorations.size();) {
        auto comma = g.decorations.find(',', pos);
        if (comma == std::string::npos) comma = g.decorations.size();
        std::string item = g.decorations.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            d.add({item, 1});
        else
            d.add({item.substr(0, colon), std::stoi(item.substr(colon + 1))});
    }
    return d;
}

ForestElem forest_expr(const GlobalOpts& g, const std::string& text) {
    const auto decs = decoration_set(g);
    return parse_forest_expr(text, decs ? &*decs : nullptr);
}

DecorationSet table_decorations(const GlobalOpts& g) {
    const auto decs = decoration_set(g);
    return decs ? *decs : DecorationSet::single_default();
}

void print_report(const LawReport& rep, bool as_json) {
    if (as_json) {
        json j;
        j["suite"] = rep.suite;
        j["algebra"] = rep.algebra;
        j["instances"] = rep.instances;
        j["failures"] = json::array();
        for (const auto& f : rep.failures)
            j["failures"].push_back({{"law", f.law}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "suite " << rep.suite << " on " << rep.algebra << ": " << rep.instances
              << " instances, " << rep.failures.size() << " failures\n";
    for (const auto& f : rep.failures) {
        std::cout << "  FAIL " << f.law << " at " << f.inputs << "\n";
        std::cout << "       lhs = " << f.lhs << "\n       rhs = " << f.rhs << "\n";
    }
}

std::vector<Rational> parse_csv_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (std::size_t pos = 0; pos < s.size();) {
        auto comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(rat_parse(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

std::string series_tail(const Series& s) {
    std::string out;
    for (int n = 1; n <= s.order(); ++n) {
        if (n > 1) out += ',';
        out += rat_str(s[n]);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dendriform computations on forests and permutations"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("-D,--decorations", g.decorations,
                   "decoration alphabet 'label[:degree],...' (default: any label, degree 1)");
    app.add_option("--max-degree", g.max_degree, "degree bound for table-backed operations");
    app.add_option("--seed", g.seed, "seed for randomized sweeps");
    app.add_option("--format", g.format, "output format: text|json|tsv");

    std::string arg1, arg2;
    int weight = 4, degree = 3, order = 12;

    // ---- hck ----
    auto* hck = app.add_subcommand("hck", "Hopf operations on decorated forests");
    hck->require_subcommand(1);
    struct {
        CLI::App *mul, *cop, *copl, *copr, *coplp, *coprp, *antipode;
    } h{};
    h.mul = hck->add_subcommand("mul", "concatenation product");
    h.mul->add_option("left", arg1)->required();
    h.mul->add_option("right", arg2)->required();
    h.cop = hck->add_subcommand("cop", "full coproduct");
    h.cop->add_option("expr", arg1)->required();
    h.copl = hck->add_subcommand("copl", "left half-coproduct");
    h.copl->add_option("expr", arg1)->required();
    h.copr = hck->add_subcommand("copr", "right half-coproduct");
    h.copr->add_option("expr", arg1)->required();
    h.coplp = hck->add_subcommand("coplprime", "dual-flavoured left half-coproduct");
    h.coplp->add_option("expr", arg1)->required();
    h.coprp = hck->add_subcommand("coprprime", "dual-flavoured right half-coproduct");
    h.coprp->add_option("expr", arg1)->required();
    h.antipode = hck->add_subcommand("antipode", "antipode");
    h.antipode->add_option("expr", arg1)->required();

    // ---- fqsym ----
    auto* fq = app.add_subcommand("fqsym", "the permutation algebra");
    fq->require_subcommand(1);
    struct {
        CLI::App *mul, *preml, *premr, *cop, *copl, *copr;
    } q{};
    q.mul = fq->add_subcommand("mul", "shuffle product");
    q.mul->add_option("left", arg1)->required();
    q.mul->add_option("right", arg2)->required();
    q.preml = fq->add_subcommand("preml", "left half-product");
    q.preml->add_option("left", arg1)->required();
    q.preml->add_option("right", arg2)->required();
    q.premr = fq->add_subcommand("premr", "right half-product");
    q.premr->add_option("left", arg1)->required();
    q.premr->add_option("right", arg2)->required();
    q.cop = fq->add_subcommand("cop", "full coproduct");
    q.cop->add_option("expr", arg1)->required();
    q.copl = fq->add_subcommand("copl", "left half-coproduct");
    q.copl->add_option("expr", arg1)->required();
    q.copr = fq->add_subcommand("copr", "right half-coproduct");
    q.copr->add_option("expr", arg1)->required();

    // ---- pair ----
    auto* pair_cmd = app.add_subcommand("pair", "the bidendriform pairing on forests");
    std::string oracle = "recursive";
    pair_cmd->add_option("left", arg1, "forest");
    pair_cmd->add_option("right", arg2, "forest");
    pair_cmd->add_option("--oracle", oracle, "recursive|bijection|both");
    auto* pair_table = pair_cmd->add_subcommand("table", "full pairing table at a weight");
    pair_table->add_option("--weight", weight)->required();

    // ---- halfprod ----
    auto* hp = app.add_subcommand("halfprod", "reconstructed half-products on forests");
    hp->require_subcommand(1);
    auto* hp_preml = hp->add_subcommand("preml", "left half-product");
    hp_preml->add_option("left", arg1)->required();
    hp_preml->add_option("right", arg2)->required();
    auto* hp_premr = hp->add_subcommand("premr", "right half-product");
    hp_premr->add_option("left", arg1)->required();
    hp_premr->add_option("right", arg2)->required();
    auto* hp_table = hp->add_subcommand("table", "all pairs up to a degree bound");
    int hp_max = 3;
    hp_table->add_option("--max", hp_max, "total degree bound");

    // ---- prim ----
    auto* prim_cmd = app.add_subcommand("prim", "totally primitive subspaces");
    prim_cmd->require_subcommand(1);
    std::string algebra = "fqsym";
    auto* prim_dims = prim_cmd->add_subcommand("dims", "dimensions per degree");
    prim_dims->add_option("--algebra", algebra, "fqsym|hck");
    int prim_max = 4;
    prim_dims->add_option("--max", prim_max)->required();
    auto* prim_basis = prim_cmd->add_subcommand("basis", "echelon basis at a degree");
    prim_basis->add_option("--algebra", algebra, "fqsym|hck");
    prim_basis->add_option("--degree", degree)->required();

    // ---- series ----
    auto* series_cmd = app.add_subcommand("series", "enumerative power series");
    series_cmd->require_subcommand(1);
    std::string csv;
    auto* s_p = series_cmd->add_subcommand("p-from-dims", "totally-primitive dims from graded dims");
    s_p->add_option("--dims", csv, "comma-separated dims of degrees 1..k")->required();
    s_p->add_option("--order", order);
    auto* s_r = series_cmd->add_subcommand("r-from-d", "graded dims from decoration counts");
    s_r->add_option("--d", csv, "comma-separated decoration counts for degrees 1..k")->required();
    s_r->add_option("--order", order);

    // ---- iso ----
    auto* iso_cmd = app.add_subcommand("iso", "the forest/permutation isomorphism");
    iso_cmd->require_subcommand(1);
    auto* iso_check = iso_cmd->add_subcommand("check", "per-degree counts, ranks, intertwining");
    int iso_max = 5;
    bool iso_json = false;
    iso_check->add_option("--max", iso_max);
    iso_check->add_flag("--json", iso_json);

    // ---- laws ----
    auto* laws_cmd = app.add_subcommand("laws", "axiom suites");
    std::string suite = "dendriform";
    std::string laws_algebra = "fqsym";
    int maxdeg = 6, samples = 500, exhaustive_to = 4;
    bool laws_json = false;
    laws_cmd->add_option("--suite", suite, "dendriform|codendriform|dend-bialgebra|codend-bialgebra|bidendriform|module|tensor|pairing")->required();
    laws_cmd->add_option("--algebra", laws_algebra, "fqsym|hck|hck-dualprime");
    laws_cmd->add_option("--maxdeg", maxdeg);
    laws_cmd->add_option("--samples", samples);
    laws_cmd->add_option("--exhaustive-to", exhaustive_to, "exhaustive band bound");
    laws_cmd->add_flag("--json", laws_json);

    // ---- golden ----
    auto* golden_cmd = app.add_subcommand("golden", "golden-data regression");
    golden_cmd->require_subcommand(1);
    auto* golden_run = golden_cmd->add_subcommand("run", "replay every golden file");
    std::string golden_dir = "tests/golden";
    bool golden_list = false;
    golden_run->add_option("--dir", golden_dir, "directory of golden files");
    golden_run->add_flag("--list", golden_list, "print the file-to-description mapping only");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto decs_opt = decoration_set(g);

        if (h.mul && h.mul->parsed())
            std::cout << concat(forest_expr(g, arg1), forest_expr(g, arg2)).str() << "\n";
        else if (h.cop && h.cop->parsed())
            std::cout << coproduct(forest_expr(g, arg1)).str() << "\n";
        else if (h.copl && h.copl->parsed())
            std::cout << delta_pre(forest_expr(g, arg1)).str() << "\n";
        else if (h.copr && h.copr->parsed())
            std::cout << delta_suc(forest_expr(g, arg1)).str() << "\n";
        else if (h.coplp && h.coplp->parsed())
            std::cout << delta_pre_prime(forest_expr(g, arg1)).str() << "\n";
        else if (h.coprp && h.coprp->parsed())
            std::cout << delta_suc_prime(forest_expr(g, arg1)).str() << "\n";
        else if (h.antipode && h.antipode->parsed())
            std::cout << antipode(forest_expr(g, arg1)).str() << "\n";

        else if (q.mul->parsed())
            std::cout << fqsym::product(parse_perm_expr(arg1), parse_perm_expr(arg2)).str() << "\n";
        else if (q.preml->parsed())
            std::cout << fqsym::prec(parse_perm_expr(arg1), parse_perm_expr(arg2)).str() << "\n";
        else if (q.premr->parsed())
            std::cout << fqsym::succ(parse_perm_expr(arg1), parse_perm_expr(arg2)).str() << "\n";
        else if (q.cop->parsed())
            std::cout << fqsym::coproduct(parse_perm_expr(arg1)).str() << "\n";
        else if (q.copl->parsed())
            std::cout << fqsym::delta_pre(parse_perm_expr(arg1)).str() << "\n";
        else if (q.copr->parsed())
            std::cout << fqsym::delta_suc(parse_perm_expr(arg1)).str() << "\n";

        else if (pair_table->parsed()) {
            const DecorationSet d = table_decorations(g);
            const GramMatrix gm = gram(d, weight);
            if (g.format == "json") {
                json j;
                j["weight"] = weight;
                j["basis"] = json::array();
                for (const auto& bkey : gm.basis) j["basis"].push_back(bkey.str());
                j["values"] = json::array();
                for (std::size_t i = 0; i < gm.basis.size(); ++i) {
                    json row = json::array();
                    for (std::size_t jj = 0; jj < gm.basis.size(); ++jj)
                        row.push_back(rat_str(gm.values.at(i, jj)));
                    j["values"].push_back(row);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "F";
                for (const auto& bkey : gm.basis) std::cout << '\t' << bkey.str();
                std::cout << "\n";
                for (std::size_t i = 0; i < gm.basis.size(); ++i) {
                    std::cout << gm.basis[i].str();
                    for (std::size_t j = 0; j < gm.basis.size(); ++j)
                        std::cout << '\t' << rat_str(gm.values.at(i, j));
                    std::cout << "\n";
                }
            }
        } else if (pair_cmd->parsed()) {
            if (arg1.empty() || arg2.empty()) throw ParseError(0, "pair wants two forests");
            const Forest f = parse_forest(arg1, decs_opt ? &*decs_opt : nullptr);
            const Forest gg = parse_forest(arg2, decs_opt ? &*decs_opt : nullptr);
            if (oracle == "recursive") {
                std::cout << rat_str(pair_forests(f, gg)) << "\n";
            } else if (oracle == "bijection") {
                std::cout << rat_str(pair_oracle(f, gg)) << "\n";
            } else if (oracle == "both") {
                const Rational a = pair_forests(f, gg);
                const Rational b = pair_oracle(f, gg);
                if (a != b) {
                    std::cerr << "MISMATCH: recursion " << rat_str(a) << " vs bijection count "
                              << rat_str(b) << "\n";
                    return 1;
                }
                std::cout << rat_str(a) << "\n";
            } else {
                throw ParseError(0, "unknown oracle: " + oracle);
            }
        }

        else if (hp_preml->parsed() || hp_premr->parsed()) {
            const DecorationSet d = table_decorations(g);
            const Forest f = parse_forest(arg1, &d);
            const Forest gg = parse_forest(arg2, &d);
            HalfProductTable table(d, std::max(g.max_degree, f.degree() + gg.degree()));
            std::cout << (hp_preml->parsed() ? table.prec(f, gg) : table.succ(f, gg)).str() << "\n";
        } else if (hp_table->parsed()) {
            const DecorationSet d = table_decorations(g);
            HalfProductTable table(d, hp_max);
            table.build_all();
            if (g.format == "json") {
                json j = json::array();
                for (const auto& e : table.entries())
                    j.push_back({{"left", e.left.str()},
                                 {"right", e.right.str()},
                                 {"preml", e.prec.str()},
                                 {"premr", e.succ.str()}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "left\tright\tpreml\tpremr\n";
                for (const auto& e : table.entries())
                    std::cout << e.left.str() << '\t' << e.right.str() << '\t' << e.prec.str() << '\t'
                              << e.succ.str() << "\n";
            }
        }

        else if (prim_dims->parsed() || prim_basis->parsed()) {
            const bool dims = prim_dims->parsed();
            auto show = [&](auto&& alg) {
                if (dims) {
                    for (int n = 1; n <= prim_max; ++n) {
                        const auto sub = prim_tot_basis(alg, n);
                        std::cout << (n > 1 ? "," : "") << sub.dim();
                    }
                    std::cout << "\n";
                } else {
                    const auto sub = prim_tot_basis(alg, degree);
                    for (const auto& v : sub.vectors()) std::cout << v.str() << "\n";
                }
            };
            if (algebra == "fqsym") {
                show(FqsymAlgebra{});
            } else if (algebra == "hck") {
                const DecorationSet d = table_decorations(g);
                auto table = std::make_shared<HalfProductTable>(d, std::max(g.max_degree, dims ? prim_max : degree));
                show(HckAlgebra(table));
            } else {
                throw ParseError(0, "unknown algebra: " + algebra);
            }
        }

        else if (s_p->parsed()) {
            const auto dims = parse_csv_rationals(csv);
            const int n = std::max<int>(order, static_cast<int>(dims.size()));
            Series r(n);
            for (std::size_t i = 0; i < dims.size(); ++i) r[static_cast<int>(i) + 1] = dims[i];
            std::cout << series_tail(p_from_r(r)) << "\n";
        } else if (s_r->parsed()) {
            const auto dd = parse_csv_rationals(csv);
            const int n = std::max<int>(order, static_cast<int>(dd.size()));
            Series d(n);
            for (std::size_t i = 0; i < dd.size(); ++i) d[static_cast<int>(i) + 1] = dd[i];
            std::cout << r_from_d(d).str() << "\n";
        }

        else if (iso_check->parsed()) {
            const IsoReport rep = verify_iso(iso_max, std::min(iso_max, 4));
            if (iso_json || g.format == "json") {
                json j;
                j["max_degree"] = rep.max_degree;
                j["counting_ok"] = rep.counting_ok;
                j["intertwining_ok"] = rep.intertwining_ok;
                j["intertwining_degree"] = rep.intertwining_degree;
                j["degrees"] = json::array();
                for (const auto& d : rep.degrees)
                    j["degrees"].push_back({{"degree", d.degree},
                                            {"forests", d.forest_count},
                                            {"expected", d.expected},
                                            {"rank", d.rank},
                                            {"ok", d.ok()}});
                j["ok"] = rep.ok();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& d : rep.degrees)
                    std::cout << "degree " << d.degree << ": forests " << d.forest_count << ", rank "
                              << d.rank << " / " << d.expected << (d.ok() ? "  ok" : "  MISMATCH")
                              << "\n";
                std::cout << "counting audit: " << (rep.counting_ok ? "ok" : "FAILED") << "\n";
                std::cout << "half-coproduct intertwining through degree " << rep.intertwining_degree
                          << ": " << (rep.intertwining_ok ? "ok" : "FAILED at " + rep.first_failure)
                          << "\n";
            }
            if (!rep.ok()) return 1;
        }

        else if (laws_cmd->parsed()) {
            SuiteConfig cfg;
            cfg.max_degree = maxdeg;
            cfg.samples = samples;
            cfg.seed = g.seed;
            cfg.exhaustive_to = std::min(maxdeg, exhaustive_to);
            const LawReport rep = run_suite(suite, laws_algebra, cfg);
            print_report(rep, laws_json || g.format == "json");
            if (!rep.passed()) return 1;
        }

        else if (golden_run->parsed()) {
            if (golden_list) {
                for (const auto& l : list_golden_dir(golden_dir))
                    std::cout << l.file << "\t" << l.description << "\n";
                return 0;
            }
            bool all_ok = true;
            for (const auto& r : run_golden_dir(golden_dir)) {
                std::cout << (r.passed() ? "ok   " : "FAIL ") << r.file << " (" << r.checks
                          << " checks)";
                if (!r.description.empty()) std::cout << "  - " << r.description;
                std::cout << "\n";
                for (const auto& m : r.mismatches) std::cout << "     " << m << "\n";
                all_ok = all_ok && r.passed();
            }
            if (!all_ok) return 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
