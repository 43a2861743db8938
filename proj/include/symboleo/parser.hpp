#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "symboleo/ast.hpp"
#include "symboleo/taxonomy.hpp"

namespace symboleo {

// Full expects a whole document (Domain block, Contract header, sections).
// Fragment accepts a sequence of section blocks, as pasted out of a larger
// document. Auto picks Fragment when the first significant token is a
// section keyword, Full otherwise.
enum class ParseMode { Auto, Full, Fragment };

struct ParseOptions {
  ParseMode mode = ParseMode::Auto;
  int max_nesting_depth = 64;  // expression depth guard
};

struct ParseResult {
  std::optional<ContractSpec> spec;  // absent only when nothing was usable
  std::vector<Diagnostic> diagnostics;  // ordered by source position

  bool clean() const { return spec.has_value() && diagnostics.empty(); }
};

// Parses Symboleo source. Never throws on bad input: problems surface as
// diagnostics and the parser resynchronises at the next ';' or section
// keyword. An absent spec implies at least one diagnostic.
ParseResult parse(std::string_view source, const ParseOptions& options = {});

}  // namespace symboleo
