#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lamk/polynomial.hpp"

namespace lamk {

/// Parses integer literals, variable names, + - * ^ and parentheses over
/// the given variable list. Unknown names and malformed input raise
/// InputError naming the offending token.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Renders in the grammar accepted by parse_polynomial, leading term first,
/// e.g. "3*h^2 - 3*h + 1".
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names);

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

}  // namespace lamk
