#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "symboleo/source_span.hpp"

namespace symboleo {

// The sixteen error types recognised when evaluating a generated Symboleo
// specification. Ids are stable and form the external vocabulary of
// annotation files and reports; do not renumber.
enum class ErrorType : int {
  IncorrectElementsIdentification = 1,
  MissingElementsIdentification = 2,
  InformationFromOutsideQuery = 3,
  MissingConditions = 4,
  MissingCalculations = 5,
  MissingAllAttributes = 6,
  MisunderstoodStructureRoles = 7,
  IncorrectDataType = 8,
  GrammarInconsistency = 9,
  MisidentifiedEnvironmentVariables = 10,
  WrongLogic = 11,
  IncorrectCalculations = 12,
  UnnecessaryInformation = 13,
  MissingAttributes = 14,
  IncorrectSyntax = 15,
  MissingParameters = 16,
};

inline constexpr int kErrorTypeCount = 16;

enum class Severity { High, Medium, Low };

struct TaxonomyEntry {
  ErrorType type;
  std::string_view name;  // display name, as used in reports
  Severity tier;
  int weight;  // High=4, Medium=3, Low=2
};

// Fixed registry, ordered by id (High 1-7, Medium 8-14, Low 15-16).
const std::array<TaxonomyEntry, kErrorTypeCount>& taxonomy();

const TaxonomyEntry& taxonomy_entry(ErrorType type);
int weight_of(ErrorType type);
std::string_view name_of(ErrorType type);
int severity_weight(Severity tier);
std::string_view severity_name(Severity tier);

// Lookup by numeric id (1-16); nullopt when out of range.
std::optional<ErrorType> error_type_from_id(int id);
// Lookup by display name (exact match); nullopt when unknown.
std::optional<ErrorType> error_type_from_name(std::string_view name);

// Report sections. A specification is scored per section; every diagnostic
// and annotation carries one of these buckets.
enum class Section : int {
  ContractStructure = 0,
  Domain,
  Declarations,
  Precondition,
  Postcondition,
  Signature,
  ObligationsAndPowers,
  Constraints,
};

inline constexpr int kSectionCount = 8;

const std::array<Section, kSectionCount>& all_sections();
std::string_view section_short_name(Section s);  // Cont, Dom, Dec, Pre, Pos, Sig, OP, Cos
std::string_view section_long_name(Section s);
// Accepts both the short and the long spelling.
std::optional<Section> section_from_name(std::string_view name);

enum class Origin { Auto, Manual };

// One finding against a specification: an error-type instance located in a
// section, optionally pinned to a source region.
struct Diagnostic {
  ErrorType type = ErrorType::IncorrectSyntax;
  Section section = Section::ContractStructure;
  SourceSpan span;
  Origin origin = Origin::Auto;
  std::string message;

  int weight() const { return weight_of(type); }

  friend bool operator==(const Diagnostic& a, const Diagnostic& b) {
    return a.type == b.type && a.section == b.section && a.span == b.span &&
           a.origin == b.origin && a.message == b.message;
  }
};

// Sort key: source position first, then id; stable presentation order.
bool diagnostic_before(const Diagnostic& a, const Diagnostic& b);

}  // namespace symboleo
