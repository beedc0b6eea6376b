#ifndef SAW_MUEXPR_HPP
#define SAW_MUEXPR_HPP

#include <string>

namespace saw {

// Evaluates arithmetic expressions like "sqrt(2+sqrt(2))" for exact
// connective constants given on the command line. Supports + - * / ( ),
// decimal literals, sqrt and cbrt. Throws SawError(BadInput) on parse
// failure.
double evaluate_mu_expression(const std::string& text);

} // namespace saw

#endif
