#include "bidend/golden.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bidend/expr.hpp"
#include "bidend/hck.hpp"
#include "bidend/pairing.hpp"
#include "bidend/series.hpp"

namespace bidend {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

DecorationSet parse_decorations(const std::string& text) {
    DecorationSet d;
    for (const auto& item : split(text, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            d.add({item, 1});
        else
            d.add({item.substr(0, colon), std::stoi(item.substr(colon + 1))});
    }
    return d;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& item : split(s, ',')) out.push_back(rat_parse(item));
    return out;
}

std::string eval_check(const std::string& op, const std::string& in, const DecorationSet& decs) {
    auto forest_arg = [&](const std::string& t) { return parse_forest(t, &decs); };
    if (op == "hck.cop") return coproduct(forest_arg(in)).str();
    if (op == "hck.copl") return delta_pre(forest_arg(in)).str();
    if (op == "hck.copr") return delta_suc(forest_arg(in)).str();
    if (op == "hck.coplprime") return delta_pre_prime(forest_arg(in)).str();
    if (op == "hck.coprprime") return delta_suc_prime(forest_arg(in)).str();
    if (op == "hck.antipode") return antipode(parse_forest_expr(in, &decs)).str();
    if (op == "hck.mul") {
        const auto parts = split(in, ';');
        if (parts.size() != 2) throw std::invalid_argument("hck.mul wants 'F ; G'");
        return concat(parse_forest_expr(parts[0], &decs), parse_forest_expr(parts[1], &decs)).str();
    }
    if (op == "xi") {
        const auto parts = split(in, ';');
        if (parts.size() != 2) throw std::invalid_argument("xi wants 'label ; F'");
        const auto dec = decs.find(parts[0]);
        if (!dec) throw std::invalid_argument("unknown decoration " + parts[0]);
        return xi(*dec, forest_arg(parts[1])).str();
    }
    if (op == "fqsym.mul" || op == "fqsym.preml" || op == "fqsym.premr") {
        const auto parts = split(in, ';');
        if (parts.size() != 2) throw std::invalid_argument(op + " wants 'u ; v'");
        const FqElem u = parse_perm_expr(parts[0]);
        const FqElem v = parse_perm_expr(parts[1]);
        if (op == "fqsym.mul") return fqsym::product(u, v).str();
        if (op == "fqsym.preml") return fqsym::prec(u, v).str();
        return fqsym::succ(u, v).str();
    }
    if (op == "fqsym.cop") return fqsym::coproduct(parse_perm_expr(in)).str();
    if (op == "fqsym.copl") return fqsym::delta_pre(parse_perm_expr(in)).str();
    if (op == "fqsym.copr") return fqsym::delta_suc(parse_perm_expr(in)).str();
    if (op == "series.p-from-dims") {
        const auto dims = parse_rational_list(in);
        Series r(static_cast<int>(dims.size()));
        for (std::size_t i = 0; i < dims.size(); ++i) r[static_cast<int>(i) + 1] = dims[i];
        const Series p = p_from_r(r);
        std::string out;
        for (int n = 1; n <= p.order(); ++n) {
            if (n > 1) out += ',';
            out += rat_str(p[n]);
        }
        return out;
    }
    if (op == "series.r-from-d") {
        const auto dcoef = parse_rational_list(in);
        Series d(static_cast<int>(dcoef.size()));
        for (std::size_t i = 0; i < dcoef.size(); ++i) d[static_cast<int>(i) + 1] = dcoef[i];
        return r_from_d(d).str();
    }
    throw std::invalid_argument("unknown golden op: " + op);
}

GoldenResult run_check_file(const std::string& path, std::ifstream& f) {
    GoldenResult res;
    res.file = path;
    DecorationSet decs = DecorationSet::single_default();
    std::string line, op, in, out;
    bool have_block = false;
    auto flush = [&]() {
        if (!have_block) return;
        ++res.checks;
        std::string got;
        try {
            got = eval_check(op, in, decs);
        } catch (const std::exception& e) {
            res.mismatches.push_back(op + " " + in + ": error: " + e.what());
            return;
        }
        if (got != out)
            res.mismatches.push_back(op + " " + in + ": got '" + got + "', want '" + out + "'");
    };
    while (std::getline(f, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (res.description.empty()) res.description = trim(line.substr(1));
            continue;
        }
        if (line == "[check]") {
            flush();
            have_block = true;
            op = in = out = "";
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string key = trim(line.substr(0, colon));
        const std::string val = trim(line.substr(colon + 1));
        if (key == "decorations")
            decs = parse_decorations(val);
        else if (key == "op")
            op = val;
        else if (key == "in")
            in = val;
        else if (key == "out")
            out = val;
    }
    flush();
    return res;
}

GoldenResult run_table_file(const std::string& path, std::ifstream& f) {
    GoldenResult res;
    res.file = path;
    DecorationSet decs = DecorationSet::single_default();
    std::string line;
    std::vector<std::string> header;
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    std::string op = "pair.table";
    while (std::getline(f, line)) {
        if (!line.empty() && line[0] == '#') {
            const std::string body = trim(line.substr(1));
            if (body.rfind("op ", 0) == 0)
                op = trim(body.substr(3));
            else if (body.rfind("decorations ", 0) == 0)
                decs = parse_decorations(trim(body.substr(12)));
            else if (res.description.empty())
                res.description = body;
            continue;
        }
        if (trim(line).empty()) continue;
        auto cells = split(line, '\t');
        if (header.empty()) {
            header.assign(cells.begin() + 1, cells.end());
        } else {
            rows.emplace_back(cells[0], std::vector<std::string>(cells.begin() + 1, cells.end()));
        }
    }
    if (op != "pair.table") {
        res.mismatches.push_back("unknown table op " + op);
        return res;
    }
    for (const auto& [rowname, cells] : rows) {
        const Forest fst = parse_forest(rowname, &decs);
        for (std::size_t j = 0; j < header.size() && j < cells.size(); ++j) {
            ++res.checks;
            const Forest g = parse_forest(header[j], &decs);
            const std::string want = cells[j];
            const Rational recursive = pair_forests(fst, g);
            const Rational counted = pair_oracle(fst, g);
            if (rat_str(recursive) != want)
                res.mismatches.push_back("<" + rowname + ", " + header[j] + ">: recursion gives " +
                                         rat_str(recursive) + ", table says " + want);
            if (recursive != counted)
                res.mismatches.push_back("<" + rowname + ", " + header[j] + ">: bijection count " +
                                         rat_str(counted) + " != recursion " + rat_str(recursive));
        }
    }
    return res;
}

}  // namespace

GoldenResult run_golden_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        GoldenResult res;
        res.file = path;
        res.mismatches.push_back("cannot open file");
        return res;
    }
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".tsv") return run_table_file(path, f);
    return run_check_file(path, f);
}

std::vector<GoldenResult> run_golden_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string ext = e.path().extension().string();
        if (ext == ".txt" || ext == ".tsv") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    std::vector<GoldenResult> out;
    for (const auto& f : files) out.push_back(run_golden_file(f));
    return out;
}

std::vector<GoldenListing> list_golden_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<GoldenListing> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string ext = e.path().extension().string();
        if (ext != ".txt" && ext != ".tsv") continue;
        std::ifstream f(e.path());
        std::string line, desc;
        while (std::getline(f, line)) {
            line = trim(line);
            if (line.empty()) continue;
            if (line[0] == '#') {
                std::string body = trim(line.substr(1));
                if (body.rfind("op ", 0) == 0 || body.rfind("decorations ", 0) == 0) continue;
                desc = body;
            }
            break;
        }
        out.push_back({e.path().string(), desc});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
    return out;
}

}  // namespace bidend
