#include "symboleo/linter.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace symboleo {

bool SymbolTable::is_base_type(std::string_view name) {
  return name == "Number" || name == "String" || name == "Date" || name == "Boolean";
}

const DomainConcept* SymbolTable::concept_named(std::string_view name) const {
  auto it = concepts.find(name);
  return it == concepts.end() ? nullptr : it->second;
}

std::optional<ConceptKind> SymbolTable::root_kind(const DomainConcept& c) const {
  const DomainConcept* cur = &c;
  std::set<const DomainConcept*> seen;
  while (cur->kind == ConceptKind::Derived) {
    if (!seen.insert(cur).second) return std::nullopt;
    cur = concept_named(cur->parent);
    if (!cur) return std::nullopt;
  }
  return cur->kind;
}

const Attribute* SymbolTable::find_attribute(const DomainConcept& c, std::string_view attr) const {
  const DomainConcept* cur = &c;
  std::set<const DomainConcept*> seen;
  while (cur && seen.insert(cur).second) {
    for (const auto& a : cur->attributes)
      if (a.name == attr) return &a;
    cur = cur->kind == ConceptKind::Derived ? concept_named(cur->parent) : nullptr;
  }
  return nullptr;
}

const std::map<std::string, int, std::less<>>& known_predicates() {
  static const std::map<std::string, int, std::less<>> arities = {
      {"Happens", 1},        {"HappensAfter", 2},  {"WhappensBefore", 2},
      {"ShappensBefore", 2}, {"HappensWithin", 2}, {"Violated", 1},
      {"Fulfilled", 1},      {"Triggered", 1},     {"Suspended", 1},
      {"Resumed", 1},        {"Terminated", 1},    {"IsEqual", 2},
  };
  return arities;
}

namespace {

Section bucket_for(SourceSection s) {
  switch (s) {
    case SourceSection::Declarations: return Section::Declarations;
    case SourceSection::Preconditions: return Section::Precondition;
    case SourceSection::Postconditions: return Section::Postcondition;
    case SourceSection::Obligations:
    case SourceSection::SurvivingObligations:
    case SourceSection::Powers: return Section::ObligationsAndPowers;
    case SourceSection::Constraints: return Section::Constraints;
  }
  return Section::ContractStructure;
}

Diagnostic diag(ErrorType type, Section section, SourceSpan span, std::string message) {
  Diagnostic d;
  d.type = type;
  d.section = section;
  d.span = span;
  d.message = std::move(message);
  return d;
}

void for_each_norm(const ContractSpec& spec, const std::function<void(const Norm&)>& fn) {
  for (const auto& n : spec.obligations) fn(n);
  for (const auto& n : spec.surviving_obligations) fn(n);
  for (const auto& n : spec.powers) fn(n);
}

// Every situation node in the tree, nested predicate arguments included.
void walk_situations(const SituationExpr& e, const std::function<void(const SituationExpr&)>& fn) {
  fn(e);
  for (const auto& arg : e.args) {
    if (std::holds_alternative<SituationExprPtr>(arg))
      walk_situations(*std::get<SituationExprPtr>(arg), fn);
  }
  for (const auto& child : e.children) walk_situations(*child, fn);
}

// Top-level situations with the section they belong to.
void for_each_situation_root(const ContractSpec& spec,
                             const std::function<void(const SituationExpr&, SourceSection)>& fn) {
  for_each_norm(spec, [&](const Norm& n) {
    if (n.trigger) fn(*n.trigger, n.home);
    if (n.antecedent) fn(*n.antecedent, n.home);
    if (n.consequent) fn(*n.consequent, n.home);
  });
  for (const auto& e : spec.preconditions) fn(*e, SourceSection::Preconditions);
  for (const auto& e : spec.postconditions) fn(*e, SourceSection::Postconditions);
  for (const auto& e : spec.constraints) fn(*e, SourceSection::Constraints);
}

enum class ValueRole { Read, Party };

void walk_values_in(const ValueExpr& e, SourceSection home, ValueRole role,
                    const std::function<void(const ValueExpr&, SourceSection, ValueRole)>& fn) {
  fn(e, home, role);
  if (e.lhs) walk_values_in(*e.lhs, home, role, fn);
  if (e.rhs) walk_values_in(*e.rhs, home, role, fn);
}

void walk_values_in(const SituationExpr& e, SourceSection home,
                    const std::function<void(const ValueExpr&, SourceSection, ValueRole)>& fn) {
  for (const auto& arg : e.args) {
    if (std::holds_alternative<ValueExprPtr>(arg))
      walk_values_in(*std::get<ValueExprPtr>(arg), home, ValueRole::Read, fn);
    else
      walk_values_in(*std::get<SituationExprPtr>(arg), home, fn);
  }
  for (const auto& child : e.children) walk_values_in(*child, home, fn);
  if (e.lhs) walk_values_in(*e.lhs, home, ValueRole::Read, fn);
  if (e.rhs) walk_values_in(*e.rhs, home, ValueRole::Read, fn);
}

// Every value expression in the document with its section and role.
// Parties are references, not reads, and are reported separately.
void for_each_value(const ContractSpec& spec,
                    const std::function<void(const ValueExpr&, SourceSection, ValueRole)>& fn) {
  for (const auto& p : spec.signature) {
    if (p.initializer)
      walk_values_in(*p.initializer, SourceSection::Declarations, ValueRole::Read, fn);
  }
  for (const auto& d : spec.declarations) {
    for (const auto& init : d.initializers) {
      if (init.value) walk_values_in(*init.value, d.home, ValueRole::Read, fn);
    }
  }
  for_each_norm(spec, [&](const Norm& n) {
    if (n.first_party) walk_values_in(*n.first_party, n.home, ValueRole::Party, fn);
    if (n.second_party) walk_values_in(*n.second_party, n.home, ValueRole::Party, fn);
  });
  for_each_situation_root(spec,
                          [&](const SituationExpr& e, SourceSection home) { walk_values_in(e, home, fn); });
}

// --- path resolution ------------------------------------------------------

struct Resolution {
  enum class Status {
    Ok,           // resolves to a typed value; type_name holds the type
    EnumLiteral,  // a literal of the enumeration named in type_name
    NormRef,      // obligations.X / powers.X
    ContractRef,  // the whole contract
    Opaque,       // head resolves but an unknown type interrupts the chain
    Unresolved,
  };
  Status status = Status::Unresolved;
  std::string type_name;
  std::string message;
};

Resolution resolve_path(const SymbolTable& t, const std::vector<std::string>& path) {
  Resolution r;
  if (path.empty()) {
    r.message = "empty reference";
    return r;
  }
  const std::string& head = path.front();
  if (head == "contract") {
    if (path.size() == 1) {
      r.status = Resolution::Status::ContractRef;
    } else {
      r.message = "'contract' does not expose attributes";
    }
    return r;
  }
  if (head == "obligations" || head == "powers") {
    const auto& norms = head == "obligations" ? t.obligations : t.powers;
    if (path.size() != 2) {
      r.message = "expected '" + head + ".<name>'";
    } else if (norms.count(path[1])) {
      r.status = Resolution::Status::NormRef;
    } else {
      r.message = "unknown " + std::string(head == "obligations" ? "obligation" : "power") +
                  " '" + path[1] + "'";
    }
    return r;
  }
  std::string type;
  if (auto it = t.declarations.find(head); it != t.declarations.end()) {
    type = it->second->type_name;
  } else if (auto it = t.parameters.find(head); it != t.parameters.end()) {
    type = it->second->type_name;
  } else if (path.size() == 1) {
    if (auto it = t.enum_literals.find(head); it != t.enum_literals.end()) {
      r.status = Resolution::Status::EnumLiteral;
      r.type_name = it->second;
      return r;
    }
    r.message = "unresolved reference '" + head + "'";
    return r;
  } else {
    r.message = "unresolved reference '" + head + "'";
    return r;
  }
  for (size_t i = 1; i < path.size(); ++i) {
    if (SymbolTable::is_base_type(type)) {
      r.message = "'" + type + "' values have no attribute '" + path[i] + "'";
      return r;
    }
    const DomainConcept* c = t.concept_named(type);
    if (!c) {
      // Unknown type: reported by the type check, not here.
      r.status = Resolution::Status::Opaque;
      return r;
    }
    const Attribute* a = t.find_attribute(*c, path[i]);
    if (!a) {
      r.message = "concept '" + c->name + "' has no attribute '" + path[i] + "'";
      return r;
    }
    type = a->type_name;
  }
  r.status = Resolution::Status::Ok;
  r.type_name = type;
  return r;
}

// Value type when it can be determined locally: base type name, concept
// name, or enumeration name.
std::optional<std::string> infer_type(const SymbolTable& t, const ValueExpr& e) {
  switch (e.kind) {
    case ValueExpr::Kind::Number: return "Number";
    case ValueExpr::Kind::String: return "String";
    case ValueExpr::Kind::Date: return "Date";
    case ValueExpr::Kind::Bool: return "Boolean";
    case ValueExpr::Kind::Binary: return "Number";
    case ValueExpr::Kind::Path: {
      Resolution r = resolve_path(t, e.path);
      if (r.status == Resolution::Status::Ok || r.status == Resolution::Status::EnumLiteral)
        return r.type_name;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool types_compatible(const SymbolTable& t, const std::string& a, const std::string& b) {
  if (a == b) return true;
  const DomainConcept* ca = t.concept_named(a);
  const DomainConcept* cb = t.concept_named(b);
  if (ca && cb) {
    auto ra = t.root_kind(*ca);
    auto rb = t.root_kind(*cb);
    return ra && rb && *ra == *rb;  // e.g. two roles compared with IsEqual
  }
  return false;
}

}  // namespace

// --- build_symbols --------------------------------------------------------

std::pair<SymbolTable, std::vector<Diagnostic>> build_symbols(const ContractSpec& spec) {
  SymbolTable table;
  table.spec = &spec;
  std::vector<Diagnostic> out;

  for (const auto& c : spec.domain.concepts) {
    if (!table.concepts.emplace(c.name, &c).second) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::Domain, c.span,
                         "duplicate concept '" + c.name + "'"));
      continue;
    }
    if (c.kind == ConceptKind::Enumeration) {
      for (const auto& lit : c.enum_literals) {
        if (!table.enum_literals.emplace(lit, c.name).second) {
          out.push_back(diag(ErrorType::GrammarInconsistency, Section::Domain, c.span,
                             "enumeration literal '" + lit + "' is declared twice"));
        }
      }
    }
  }
  for (const auto& p : spec.signature) {
    if (!table.parameters.emplace(p.name, &p).second) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::Signature, p.span,
                         "duplicate parameter '" + p.name + "'"));
    }
  }
  for (const auto& d : spec.declarations) {
    if (!table.declarations.emplace(d.name, &d).second) {
      out.push_back(diag(ErrorType::GrammarInconsistency, bucket_for(d.home), d.span,
                         "duplicate declaration '" + d.name + "'"));
    }
  }
  for_each_norm(spec, [&](const Norm& n) {
    auto& mine = n.kind == NormKind::Obligation ? table.obligations : table.powers;
    auto& other = n.kind == NormKind::Obligation ? table.powers : table.obligations;
    if (other.count(n.name) || !mine.emplace(n.name, &n).second) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::ObligationsAndPowers, n.span,
                         "duplicate norm '" + n.name + "'"));
    }
  });

  if (!spec.fragment) {
    if (spec.domain.name.empty() && spec.domain.concepts.empty()) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::ContractStructure, {},
                         "missing Domain section"));
    }
    if (spec.name.empty()) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::ContractStructure, {},
                         "missing Contract header"));
    } else if (spec.signature.empty() && spec.declarations.empty()) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::Signature, {},
                         "contract has neither parameters nor declarations"));
    }
    if (spec.obligations.empty() && spec.surviving_obligations.empty() && spec.powers.empty()) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::ObligationsAndPowers, {},
                         "specification declares no obligations or powers"));
    }
  }
  return {std::move(table), std::move(out)};
}

// --- check_power_consequents ----------------------------------------------

namespace {

bool is_norm_or_contract_path(const ValueExpr& v) {
  if (v.kind != ValueExpr::Kind::Path) return false;
  if (v.path.size() == 1) return v.path.front() == "contract";
  return v.path.size() == 2 &&
         (v.path.front() == "obligations" || v.path.front() == "powers");
}

bool power_consequent_ok(const SituationExpr& e) {
  if (e.kind == SituationExpr::Kind::And) {
    return std::all_of(e.children.begin(), e.children.end(),
                       [](const SituationExprPtr& c) { return power_consequent_ok(*c); });
  }
  if (e.kind != SituationExpr::Kind::Predicate) return false;
  static const std::set<std::string> legal = {"Triggered", "Suspended", "Resumed", "Terminated"};
  if (!legal.count(e.predicate)) return false;
  if (e.args.size() != 1) return false;
  const auto& arg = e.args.front();
  if (!std::holds_alternative<ValueExprPtr>(arg)) return false;
  return is_norm_or_contract_path(*std::get<ValueExprPtr>(arg));
}

}  // namespace

std::vector<Diagnostic> check_power_consequents(const ContractSpec& spec, const SymbolTable&) {
  std::vector<Diagnostic> out;
  for_each_norm(spec, [&](const Norm& n) {
    if (n.kind != NormKind::Power || !n.consequent) return;
    if (!power_consequent_ok(*n.consequent)) {
      out.push_back(diag(ErrorType::GrammarInconsistency, Section::ObligationsAndPowers,
                         n.consequent->span,
                         "power consequent must apply Triggered/Suspended/Resumed/Terminated "
                         "to a named obligation, power, or the contract"));
    }
  });
  return out;
}

// --- check_env_vars -------------------------------------------------------

std::vector<Diagnostic> check_env_vars(const ContractSpec& spec, const SymbolTable& table) {
  std::vector<Diagnostic> out;
  // (a) Env markers outside event concepts.
  for (const auto& c : spec.domain.concepts) {
    auto root = table.root_kind(c);
    if (!root || *root == ConceptKind::Event) continue;
    for (const auto& a : c.attributes) {
      if (a.is_env) {
        out.push_back(diag(ErrorType::MisidentifiedEnvironmentVariables, Section::Domain, a.span,
                           "Env marker on attribute '" + a.name + "' of non-event concept '" +
                               c.name + "'"));
      }
    }
  }
  // (b) Event attributes read in expressions while the event declares no Env
  // attribute at all: one finding per event concept.
  std::set<const DomainConcept*> flagged;
  for_each_value(spec, [&](const ValueExpr& v, SourceSection, ValueRole role) {
    if (role != ValueRole::Read) return;
    if (v.kind != ValueExpr::Kind::Path || v.path.size() < 2) return;
    const std::string& head = v.path.front();
    std::string type;
    if (auto it = table.declarations.find(head); it != table.declarations.end()) {
      type = it->second->type_name;
    } else if (auto it = table.parameters.find(head); it != table.parameters.end()) {
      type = it->second->type_name;
    } else {
      return;
    }
    const DomainConcept* c = table.concept_named(type);
    if (!c) return;
    auto root = table.root_kind(*c);
    if (!root || *root != ConceptKind::Event) return;
    bool any_env = false;
    for (const auto& a : c->attributes) any_env = any_env || a.is_env;
    if (any_env || c->attributes.empty()) return;
    if (table.find_attribute(*c, v.path[1])) flagged.insert(c);
  });
  for (const DomainConcept* c : flagged) {
    out.push_back(diag(ErrorType::MisidentifiedEnvironmentVariables, Section::Domain, c->span,
                       "attributes of event '" + c->name +
                           "' are read in expressions but none is marked Env"));
  }
  return out;
}

// --- check_types ----------------------------------------------------------

std::vector<Diagnostic> check_types(const ContractSpec& spec, const SymbolTable& table) {
  std::vector<Diagnostic> out;

  auto type_known = [&](const std::string& name) {
    return SymbolTable::is_base_type(name) || table.concept_named(name) != nullptr;
  };

  // Domain-local resolution: parents and attribute types.
  for (const auto& c : spec.domain.concepts) {
    if (c.kind == ConceptKind::Derived) {
      if (!table.concept_named(c.parent)) {
        out.push_back(diag(ErrorType::GrammarInconsistency, Section::Domain, c.span,
                           "unknown parent concept '" + c.parent + "'"));
      } else if (!table.root_kind(c)) {
        out.push_back(diag(ErrorType::GrammarInconsistency, Section::Domain, c.span,
                           "cyclic concept hierarchy at '" + c.name + "'"));
      }
    }
    for (const auto& a : c.attributes) {
      if (!type_known(a.type_name)) {
        out.push_back(diag(ErrorType::GrammarInconsistency, Section::Domain, a.span,
                           "unknown type '" + a.type_name + "'"));
      }
    }
  }

  // Contract-side type names need the whole document.
  if (!spec.fragment) {
    for (const auto& p : spec.signature) {
      if (!type_known(p.type_name)) {
        out.push_back(diag(ErrorType::GrammarInconsistency, Section::Signature, p.span,
                           "unknown type '" + p.type_name + "'"));
      }
    }
    for (const auto& d : spec.declarations) {
      if (!type_known(d.type_name)) {
        out.push_back(diag(ErrorType::GrammarInconsistency, bucket_for(d.home), d.span,
                           "unknown type '" + d.type_name + "'"));
      }
    }
  }

  // Initializer consistency.
  for (const auto& d : spec.declarations) {
    const DomainConcept* c = table.concept_named(d.type_name);
    for (const auto& init : d.initializers) {
      if (!init.value) continue;
      std::string expected;
      if (init.attribute.empty()) {
        expected = d.type_name;
        if (!type_known(expected)) continue;
      } else {
        if (!c) continue;  // unknown or base type: reported elsewhere
        const Attribute* a = table.find_attribute(*c, init.attribute);
        if (!a) continue;  // missing attribute: structure check
        expected = a->type_name;
        if (!type_known(expected)) continue;
      }
      auto actual = infer_type(table, *init.value);
      if (actual && !types_compatible(table, expected, *actual)) {
        out.push_back(diag(ErrorType::IncorrectDataType, bucket_for(d.home), init.span,
                           "initializer of type " + *actual + " does not fit " + expected));
      }
    }
  }

  // Arithmetic operands must be numbers.
  for_each_value(spec, [&](const ValueExpr& v, SourceSection home, ValueRole) {
    if (v.kind != ValueExpr::Kind::Binary) return;
    for (const ValueExprPtr* side : {&v.lhs, &v.rhs}) {
      auto t = infer_type(table, **side);
      if (t && *t != "Number") {
        out.push_back(diag(ErrorType::IncorrectDataType, bucket_for(home), (*side)->span,
                           "arithmetic on a value of type " + *t));
      }
    }
  });

  // Comparisons and IsEqual.
  for_each_situation_root(spec, [&](const SituationExpr& root, SourceSection home) {
    walk_situations(root, [&](const SituationExpr& e) {
      if (e.kind == SituationExpr::Kind::Comparison) {
        auto lt = infer_type(table, *e.lhs);
        auto rt = infer_type(table, *e.rhs);
        if (!lt || !rt) return;
        bool ordered = e.cmp == ComparisonOp::Lt || e.cmp == ComparisonOp::Le ||
                       e.cmp == ComparisonOp::Gt || e.cmp == ComparisonOp::Ge;
        if (ordered) {
          bool ok = (*lt == "Number" && *rt == "Number") || (*lt == "Date" && *rt == "Date");
          if (!ok) {
            out.push_back(diag(ErrorType::IncorrectDataType, bucket_for(home), e.span,
                               "ordered comparison between " + *lt + " and " + *rt));
          }
        } else if (!types_compatible(table, *lt, *rt)) {
          out.push_back(diag(ErrorType::IncorrectDataType, bucket_for(home), e.span,
                             "comparison between incompatible types " + *lt + " and " + *rt));
        }
      } else if (e.kind == SituationExpr::Kind::Predicate && e.predicate == "IsEqual" &&
                 e.args.size() == 2 && std::holds_alternative<ValueExprPtr>(e.args[0]) &&
                 std::holds_alternative<ValueExprPtr>(e.args[1])) {
        auto lt = infer_type(table, *std::get<ValueExprPtr>(e.args[0]));
        auto rt = infer_type(table, *std::get<ValueExprPtr>(e.args[1]));
        if (lt && rt && !types_compatible(table, *lt, *rt)) {
          out.push_back(diag(ErrorType::IncorrectDataType, bucket_for(home), e.span,
                             "IsEqual between incompatible types " + *lt + " and " + *rt));
        }
      }
    });
  });

  return out;
}

// --- check_structure ------------------------------------------------------

std::vector<Diagnostic> check_structure(const ContractSpec& spec, const SymbolTable& table) {
  std::vector<Diagnostic> out;
  for (const auto& p : spec.signature) {
    if (p.initializer) {
      out.push_back(diag(ErrorType::MisunderstoodStructureRoles, Section::Signature, p.span,
                         "parameter '" + p.name + "' is given an initial value in the signature"));
    }
  }
  for_each_norm(spec, [&](const Norm& n) {
    bool norm_home = n.home == SourceSection::Obligations ||
                     n.home == SourceSection::SurvivingObligations ||
                     n.home == SourceSection::Powers;
    if (!norm_home) {
      out.push_back(diag(ErrorType::MisunderstoodStructureRoles, bucket_for(n.home), n.span,
                         "norm '" + n.name + "' declared in the " +
                             std::string(source_section_keyword(n.home)) + " section"));
      return;
    }
    bool mismatched = (n.kind == NormKind::Power) != (n.home == SourceSection::Powers);
    if (mismatched) {
      std::string what = n.kind == NormKind::Power ? "power" : "obligation";
      out.push_back(diag(ErrorType::MisunderstoodStructureRoles, Section::ObligationsAndPowers,
                         n.span,
                         what + " '" + n.name + "' declared under " +
                             std::string(source_section_keyword(n.home))));
    }
  });
  for (const auto& d : spec.declarations) {
    if (d.home != SourceSection::Declarations) {
      out.push_back(diag(ErrorType::MisunderstoodStructureRoles, bucket_for(d.home), d.span,
                         "declaration '" + d.name + "' placed in the " +
                             std::string(source_section_keyword(d.home)) + " section"));
    }
    const DomainConcept* c = table.concept_named(d.type_name);
    if (!c) continue;
    for (const auto& init : d.initializers) {
      if (init.attribute.empty()) continue;
      if (!table.find_attribute(*c, init.attribute)) {
        out.push_back(diag(ErrorType::MisunderstoodStructureRoles, bucket_for(d.home), init.span,
                           "concept '" + c->name + "' has no attribute '" + init.attribute + "'"));
      }
    }
  }
  return out;
}

// --- check_references -----------------------------------------------------

std::vector<Diagnostic> check_references(const ContractSpec& spec, const SymbolTable& table) {
  std::vector<Diagnostic> out;
  for_each_value(spec, [&](const ValueExpr& v, SourceSection home, ValueRole role) {
    if (role == ValueRole::Party && v.kind != ValueExpr::Kind::Path) {
      out.push_back(diag(ErrorType::GrammarInconsistency, bucket_for(home), v.span,
                         "norm party must be a reference"));
      return;
    }
    if (v.kind != ValueExpr::Kind::Path) return;
    if (spec.fragment) return;  // resolution needs the whole document
    Resolution r = resolve_path(table, v.path);
    if (r.status == Resolution::Status::Unresolved) {
      out.push_back(diag(ErrorType::GrammarInconsistency, bucket_for(home), v.span, r.message));
    }
  });
  // Arity of the known predicates.
  for_each_situation_root(spec, [&](const SituationExpr& root, SourceSection home) {
    walk_situations(root, [&](const SituationExpr& e) {
      if (e.kind != SituationExpr::Kind::Predicate) return;
      auto it = known_predicates().find(e.predicate);
      if (it == known_predicates().end()) return;
      if (static_cast<int>(e.args.size()) != it->second) {
        std::ostringstream msg;
        msg << "'" << e.predicate << "' expects " << it->second << " argument"
            << (it->second == 1 ? "" : "s") << ", got " << e.args.size();
        out.push_back(diag(ErrorType::IncorrectSyntax, bucket_for(home), e.span, msg.str()));
      }
    });
  });
  return out;
}

// --- lint -----------------------------------------------------------------

std::vector<Diagnostic> lint(const ContractSpec& spec) {
  auto [table, out] = build_symbols(spec);
  auto absorb = [&out](std::vector<Diagnostic> more) {
    for (auto& d : more) out.push_back(std::move(d));
  };
  absorb(check_power_consequents(spec, table));
  absorb(check_env_vars(spec, table));
  absorb(check_types(spec, table));
  absorb(check_structure(spec, table));
  absorb(check_references(spec, table));

  std::stable_sort(out.begin(), out.end(), diagnostic_before);
  std::set<std::tuple<int, int, int, int, int>> seen;
  std::vector<Diagnostic> unique;
  for (auto& d : out) {
    auto key = std::make_tuple(static_cast<int>(d.type), d.span.start_line, d.span.start_col,
                               d.span.end_line, d.span.end_col);
    if (d.span.known() && !seen.insert(key).second) continue;
    unique.push_back(std::move(d));
  }
  return unique;
}

}  // namespace symboleo
