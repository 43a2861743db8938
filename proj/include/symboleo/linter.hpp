#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symboleo/ast.hpp"
#include "symboleo/taxonomy.hpp"

namespace symboleo {

// Name environment for one specification. Pointers refer into the spec the
// table was built from; the spec must outlive the table.
struct SymbolTable {
  const ContractSpec* spec = nullptr;
  std::map<std::string, const DomainConcept*, std::less<>> concepts;
  std::map<std::string, const Parameter*, std::less<>> parameters;
  std::map<std::string, const Declaration*, std::less<>> declarations;
  std::map<std::string, const Norm*, std::less<>> obligations;  // incl. surviving
  std::map<std::string, const Norm*, std::less<>> powers;
  std::map<std::string, std::string, std::less<>> enum_literals;  // literal -> enum

  static bool is_base_type(std::string_view name);
  const DomainConcept* concept_named(std::string_view name) const;

  // Root kind of a concept, following isA parents; nullopt when the chain
  // does not resolve or cycles.
  std::optional<ConceptKind> root_kind(const DomainConcept& c) const;

  // Attribute lookup along the parent chain.
  const Attribute* find_attribute(const DomainConcept& c, std::string_view attr) const;
};

// Event-calculus predicates with fixed arity. The vocabulary is open:
// unknown predicate names pass through unchecked.
const std::map<std::string, int, std::less<>>& known_predicates();

// Names duplicate definitions and whole-document completeness problems;
// first definition wins in the table.
std::pair<SymbolTable, std::vector<Diagnostic>> build_symbols(const ContractSpec& spec);

// A power's consequent must apply Triggered/Suspended/Resumed/Terminated to
// a named obligation/power (or "contract"), possibly conjoined with "and".
std::vector<Diagnostic> check_power_consequents(const ContractSpec& spec, const SymbolTable& table);

// Env markers belong on event attributes only, and event attributes read in
// expressions must come from a concept with Env-marked attributes.
std::vector<Diagnostic> check_env_vars(const ContractSpec& spec, const SymbolTable& table);

// Type resolution and consistency: type names, initializers, arithmetic,
// comparisons and IsEqual.
std::vector<Diagnostic> check_types(const ContractSpec& spec, const SymbolTable& table);

// Statements in the wrong place: initialized parameters, norms outside the
// norm sections or under the wrong norm keyword, declarations in norm
// sections, initializers naming attributes the concept does not have.
std::vector<Diagnostic> check_structure(const ContractSpec& spec, const SymbolTable& table);

// Reference resolution for every path that is read, party reference shape,
// and arity of the known predicates.
std::vector<Diagnostic> check_references(const ContractSpec& spec, const SymbolTable& table);

// All checks, deduplicated (same type and span) and ordered by position.
// Fragment specs skip the checks that need whole-document context
// (completeness, declaration/parameter type resolution, reference
// resolution).
std::vector<Diagnostic> lint(const ContractSpec& spec);

}  // namespace symboleo
