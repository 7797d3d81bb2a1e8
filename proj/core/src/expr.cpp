#include "bidend/expr.hpp"

#include <cctype>
#include <functional>

namespace bidend {

namespace {

// Splits an expression into (coefficient, atom text) pairs; the atom
// parsing itself is delegated so forests and permutations share the walk.
template <typename Elem>
Elem parse_expr(const std::string& text,
                const std::function<Elem(const std::string&, std::size_t)>& atom) {
    Elem acc;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    auto fail = [&](const std::string& msg) -> void { throw ParseError(pos, msg); };

    skip_ws();
    if (pos == text.size()) fail("empty expression");
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    while (true) {
        skip_ws();
        // a term may carry its own sign (the renderer emits "+ -1*x")
        while (pos < text.size() && text[pos] == '-') {
            negative = !negative;
            ++pos;
            skip_ws();
        }
        // optional coefficient: numeral [ '/' numeral ] '*'
        Rational coeff(1);
        std::size_t save = pos;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t p = pos;
            while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
            if (p < text.size() && text[p] == '/') {
                std::size_t q = p + 1;
                while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
                if (q > p + 1 && q < text.size() && text[q] == '*') {
                    coeff = rat_parse(text.substr(pos, q - pos));
                    pos = q + 1;
                }
            } else if (p < text.size() && text[p] == '*') {
                coeff = rat_parse(text.substr(pos, p - pos));
                pos = p + 1;
            }
        }
        if (pos == save) {
            // no coefficient consumed
        }
        skip_ws();
        if (pos >= text.size()) fail("expected a basis element");
        std::string atom_text;
        std::size_t atom_off = pos;
        if (text[pos] == '(') {
            int depth = 0;
            std::size_t start = ++pos;
            while (pos < text.size() && (text[pos] != ')' || depth > 0)) {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            }
            if (pos >= text.size()) fail("unbalanced parenthesis");
            atom_text = text.substr(start, pos - start);
            atom_off = start;
            ++pos;
        } else {
            // greedy scan to the next top-level +/- sign
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
            atom_text = text.substr(start, pos - start);
            while (!atom_text.empty() && atom_text.back() == ' ') atom_text.pop_back();
            atom_off = start;
        }
        if (atom_text.empty()) fail("expected a basis element");
        Elem term = atom(atom_text, atom_off);
        acc += negative ? term.scaled(-coeff) : term.scaled(coeff);

        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+') {
            negative = false;
            ++pos;
        } else if (text[pos] == '-') {
            negative = true;
            ++pos;
        } else {
            fail("expected '+' or '-'");
        }
    }
    return acc;
}

}  // namespace

ForestElem parse_forest_expr(const std::string& text, const DecorationSet* decorations) {
    return parse_expr<ForestElem>(text, [decorations](const std::string& atom, std::size_t off) {
        try {
            return ForestElem::basis(parse_forest(atom, decorations));
        } catch (const ParseError& e) {
            throw ParseError(off + e.offset, e.message);
        }
    });
}

Perm parse_perm(const std::string& text) {
    if (text.empty()) throw ParseError(0, "empty permutation");
    if (text == "e") return Perm();
    std::vector<int> word;
    if (text[0] == '[') {
        std::size_t pos = 1;
        while (pos < text.size() && text[pos] != ']') {
            std::size_t p = pos;
            while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
            if (p == pos) throw ParseError(pos, "expected a letter");
            word.push_back(std::stoi(text.substr(pos, p - pos)));
            pos = p;
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        if (pos >= text.size()) throw ParseError(pos, "missing ']'");
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected a digit");
            word.push_back(text[i] - '0');
        }
    }
    try {
        return Perm(std::move(word));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

FqElem parse_perm_expr(const std::string& text) {
    return parse_expr<FqElem>(text, [](const std::string& atom, std::size_t off) {
        try {
            return FqElem::basis(parse_perm(atom));
        } catch (const ParseError& e) {
            throw ParseError(off + e.offset, e.message);
        }
    });
}

}  // namespace bidend
