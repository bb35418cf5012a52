#pragma once

#include "bint/formula.hpp"
#include "bint/sequent.hpp"

namespace th {

inline bint::Formula f(std::string_view s) { return bint::parse_formula(s); }
inline bint::Sequent seq(std::string_view s) { return bint::parse_sequent(s); }
inline bint::Formula p() { return bint::Formula::atom("p"); }
inline bint::Formula q() { return bint::Formula::atom("q"); }
inline bint::Formula r() { return bint::Formula::atom("r"); }

}  // namespace th
