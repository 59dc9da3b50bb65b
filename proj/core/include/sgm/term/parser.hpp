#pragma once

#include <string>

#include "sgm/term/atom.hpp"
#include "sgm/term/term.hpp"

namespace sgm {

/// Grammar (whitespace-insensitive):
///   term := "S" digits | "@" name | "B(" term ("," term)+ ")"
///         | "P(" term "," term ")" | "CS[" term ("," term)+ "]"
/// Syntax errors carry the offset; semantic errors name the violated clause.
PolyhedronTerm parse_term(const std::string& text, const AtomTable& atoms = AtomTable::builtin());

}  // namespace sgm
