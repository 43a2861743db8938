#include "symboleo/taxonomy.hpp"

#include <sstream>

namespace symboleo {

std::string SourceSpan::to_string() const {
  if (!known()) return "-";
  std::ostringstream out;
  out << start_line << ':' << start_col << '-' << end_line << ':' << end_col;
  return out.str();
}

const std::array<TaxonomyEntry, kErrorTypeCount>& taxonomy() {
  static const std::array<TaxonomyEntry, kErrorTypeCount> entries = {{
      {ErrorType::IncorrectElementsIdentification, "Incorrect Elements Identification", Severity::High, 4},
      {ErrorType::MissingElementsIdentification, "Missing Elements Identification", Severity::High, 4},
      {ErrorType::InformationFromOutsideQuery, "Including Information from Outside the Query", Severity::High, 4},
      {ErrorType::MissingConditions, "Missing Conditions in the Contract", Severity::High, 4},
      {ErrorType::MissingCalculations, "Missing Calculations", Severity::High, 4},
      {ErrorType::MissingAllAttributes, "Missing All Attributes", Severity::High, 4},
      {ErrorType::MisunderstoodStructureRoles, "Misunderstanding of Structure Roles", Severity::High, 4},
      {ErrorType::IncorrectDataType, "Incorrect Data Type Identification", Severity::Medium, 3},
      {ErrorType::GrammarInconsistency, "Inconsistency with the Grammar", Severity::Medium, 3},
      {ErrorType::MisidentifiedEnvironmentVariables, "Misidentified Environment Variables", Severity::Medium, 3},
      {ErrorType::WrongLogic, "Providing Wrong Logic", Severity::Medium, 3},
      {ErrorType::IncorrectCalculations, "Incorrect Calculations", Severity::Medium, 3},
      {ErrorType::UnnecessaryInformation, "Including Unnecessary Information", Severity::Medium, 3},
      {ErrorType::MissingAttributes, "Missing Attributes", Severity::Medium, 3},
      {ErrorType::IncorrectSyntax, "Incorrect Syntax", Severity::Low, 2},
      {ErrorType::MissingParameters, "Missing Parameters", Severity::Low, 2},
  }};
  return entries;
}

const TaxonomyEntry& taxonomy_entry(ErrorType type) {
  return taxonomy()[static_cast<int>(type) - 1];
}

int weight_of(ErrorType type) { return taxonomy_entry(type).weight; }

std::string_view name_of(ErrorType type) { return taxonomy_entry(type).name; }

int severity_weight(Severity tier) {
  switch (tier) {
    case Severity::High: return 4;
    case Severity::Medium: return 3;
    case Severity::Low: return 2;
  }
  return 0;
}

std::string_view severity_name(Severity tier) {
  switch (tier) {
    case Severity::High: return "High";
    case Severity::Medium: return "Medium";
    case Severity::Low: return "Low";
  }
  return "";
}

std::optional<ErrorType> error_type_from_id(int id) {
  if (id < 1 || id > kErrorTypeCount) return std::nullopt;
  return static_cast<ErrorType>(id);
}

std::optional<ErrorType> error_type_from_name(std::string_view name) {
  for (const auto& entry : taxonomy())
    if (entry.name == name) return entry.type;
  return std::nullopt;
}

const std::array<Section, kSectionCount>& all_sections() {
  static const std::array<Section, kSectionCount> sections = {
      Section::ContractStructure, Section::Domain,    Section::Declarations,
      Section::Precondition,      Section::Postcondition, Section::Signature,
      Section::ObligationsAndPowers, Section::Constraints,
  };
  return sections;
}

std::string_view section_short_name(Section s) {
  switch (s) {
    case Section::ContractStructure: return "Cont";
    case Section::Domain: return "Dom";
    case Section::Declarations: return "Dec";
    case Section::Precondition: return "Pre";
    case Section::Postcondition: return "Pos";
    case Section::Signature: return "Sig";
    case Section::ObligationsAndPowers: return "OP";
    case Section::Constraints: return "Cos";
  }
  return "";
}

std::string_view section_long_name(Section s) {
  switch (s) {
    case Section::ContractStructure: return "ContractStructure";
    case Section::Domain: return "Domain";
    case Section::Declarations: return "Declarations";
    case Section::Precondition: return "Precondition";
    case Section::Postcondition: return "Postcondition";
    case Section::Signature: return "Signature";
    case Section::ObligationsAndPowers: return "ObligationsAndPowers";
    case Section::Constraints: return "Constraints";
  }
  return "";
}

std::optional<Section> section_from_name(std::string_view name) {
  for (Section s : all_sections()) {
    if (name == section_short_name(s) || name == section_long_name(s)) return s;
  }
  // Friendly aliases seen in hand-written annotation files.
  if (name == "Obligations&Powers" || name == "Obligations and Powers") {
    return Section::ObligationsAndPowers;
  }
  if (name == "Contract") return Section::ContractStructure;
  if (name == "Preconditions") return Section::Precondition;
  if (name == "Postconditions") return Section::Postcondition;
  return std::nullopt;
}

bool diagnostic_before(const Diagnostic& a, const Diagnostic& b) {
  if (!(a.span == b.span)) return a.span < b.span;
  if (a.type != b.type) return static_cast<int>(a.type) < static_cast<int>(b.type);
  return a.message < b.message;
}

}  // namespace symboleo
