#pragma once

#include <string>

#include "rescycle/current.hpp"

namespace rescycle {

// Expression grammar shared by all textual inputs.  Atoms: declared variable
// names, rational literals `p/q`, `bar(x)`, `d(expr)`, `dbar(expr)`,
// `pv(1/x^k)`, `res(1/x^k)`; operators `+ - *` and `^`, where `a ^ n` with a
// numeric literal n is a wedge power and `a ^ b` otherwise is the wedge/graded
// product.  Everything evaluates in the current algebra; the narrower parsers
// project down and reject values outside their target.  All failures throw
// ErrKind::Parse.
CurrentSum parse_current(const std::string& text, const VarTable& vars);
Form parse_form(const std::string& text, const VarTable& vars);
Poly parse_poly(const std::string& text, const VarTable& vars);
Monomial parse_monomial(const std::string& text, const VarTable& vars);

// re-expand pv factors into denominators; Parse error on res/opaque factors
// or a (2*pi*i) prefactor
Form current_as_form(const CurrentSum& c);

} // namespace rescycle
