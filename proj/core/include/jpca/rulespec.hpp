// Text grammar for rules:
//
//   rulespec := "poly(" "N=" int "):" polyexpr
//             | "table(" "N=" int ",span=" int ["," "lo=" int] "):" symbols
//             | name
//             | "compose(" rulespec "," rulespec ")"      outer first
//             | "shift(" rulespec "," int ")"
//             | "flip(" rulespec ")"                      flip after the rule
//             | "flipr(" rulespec ")"                     flip before the rule
//   polyexpr := term ("+" term)*
//   term     := [int] factor ( ["*"] factor )*            juxtaposition = product
//   factor   := var ["^" int] | "(" polyexpr ")"
//   var      := "x" int | "x(" ["-"] int ")"
//
// Whitespace is insignificant. All arithmetic is mod N.
#pragma once

#include <functional>
#include <string_view>

#include "jpca/rule.hpp"

namespace jpca {

// Compiles a polynomial rule. The window is the minimal interval covering
// every variable index appearing in the expression ([0,0] if none).
LocalRule from_polynomial(std::string_view expr, unsigned alphabet_size,
                          int max_index = 16);

using RuleResolver = std::function<LocalRule(std::string_view)>;

// Parses the full rulespec grammar. Bare names are looked up through
// `resolve`; with no resolver any name is a parse error.
LocalRule parse_rulespec(std::string_view spec, const RuleResolver& resolve = {});

}  // namespace jpca
