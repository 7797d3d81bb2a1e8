#ifndef BIDEND_EXPR_HPP
#define BIDEND_EXPR_HPP

#include <string>

#include "bidend/forest.hpp"
#include "bidend/fqsym.hpp"

namespace bidend {

/*
 * Linear-combination expressions over basis elements, accepting exactly
 * what LinComb::str() emits plus '-' and redundant whitespace:
 *
 *     expr := ['-'] term (('+'|'-') term)*
 *     term := (rational '*')? atom
 *     atom := '(' basis ')' | basis
 *
 * A numeral counts as a coefficient only when followed by '*'; otherwise it
 * belongs to the atom (so the permutation "12" parses as a basis element,
 * while "2*12" scales it).
 */
ForestElem parse_forest_expr(const std::string& text, const DecorationSet* decorations = nullptr);
FqElem parse_perm_expr(const std::string& text);

Perm parse_perm(const std::string& text);

}  // namespace bidend

#endif
