#pragma once

#include <string>

#include "symboleo/ast.hpp"

namespace symboleo {

// Canonical formatter. Output is deterministic: fixed section order, two
// space indentation, one statement per line, long-form Obligation/Power
// keywords, parentheses only where needed to preserve expression shape.
// For any parser-produced spec, parsing the formatted text yields a
// structurally equal spec; formatting is idempotent.
std::string format(const ContractSpec& spec);
std::string format(const SituationExpr& expr);
std::string format(const ValueExpr& expr);

}  // namespace symboleo
