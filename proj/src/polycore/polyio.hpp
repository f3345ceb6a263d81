#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polycore/ordering.hpp"
#include "polycore/polynomial.hpp"

namespace bbs::polycore {

// Text grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
// Variables are identifiers (x, y, x1, t, ...) or c[i,j].
Polynomial parse_polynomial(std::string_view text, const UniversePtr& u);
// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const UniversePtr& u);
// Identifiers occurring in `text`, in order of first appearance.
std::vector<std::string> scan_variables(std::string_view text);

// Display order: x-part by DegLex, then c-part by DegLex, then t, descending.
std::vector<Polynomial::Entry> display_terms(const Polynomial& p);
std::string format_term(const Term& t, const VariableUniverse& u);
std::string format_polynomial(const Polynomial& p);
std::string format_polynomial_list(const std::vector<Polynomial>& ps);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const UniversePtr& u);
nlohmann::json ordering_to_json(const TermOrdering& ord);

}  // namespace bbs::polycore
