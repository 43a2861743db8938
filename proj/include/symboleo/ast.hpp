#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symboleo/source_span.hpp"

namespace symboleo {

// Abstract syntax for the Symboleo subset handled by this toolkit. Nodes are
// plain structs owned through unique_ptr; a specification is a strict tree
// (no sharing). Spans are filled by the parser; hand-built nodes may leave
// them unknown. Treat nodes as immutable once constructed.

struct ValueExpr;
using ValueExprPtr = std::unique_ptr<ValueExpr>;
struct SituationExpr;
using SituationExprPtr = std::unique_ptr<SituationExpr>;

enum class BinaryOp { Add, Sub, Mul, Div, Mod };
enum class ComparisonOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view binary_op_text(BinaryOp op);
std::string_view comparison_op_text(ComparisonOp op);

// Value-level expression: a dotted reference path, a literal, or a binary
// arithmetic combination. Numbers keep their lexeme so round-trips are exact;
// dates are ISO yyyy-mm-dd strings; enum literals surface as one-segment
// paths until the linter resolves them.
struct ValueExpr {
  enum class Kind { Path, Number, String, Date, Bool, Binary };

  Kind kind = Kind::Path;
  std::vector<std::string> path;  // Kind::Path
  std::string literal;            // Number lexeme / String value / Date text
  bool bool_value = false;        // Kind::Bool
  BinaryOp op = BinaryOp::Add;    // Kind::Binary
  ValueExprPtr lhs, rhs;          // Kind::Binary
  SourceSpan span;

  std::string path_text() const;  // segments joined with '.'
};

ValueExprPtr make_path(std::vector<std::string> segments, SourceSpan span = {});
ValueExprPtr make_number(std::string lexeme, SourceSpan span = {});
ValueExprPtr make_string(std::string value, SourceSpan span = {});
ValueExprPtr make_date(std::string iso_text, SourceSpan span = {});
ValueExprPtr make_bool(bool value, SourceSpan span = {});
ValueExprPtr make_binary(BinaryOp op, ValueExprPtr lhs, ValueExprPtr rhs, SourceSpan span = {});

// Situation-level expression: the boolean layer used by preconditions,
// postconditions, constraints, triggers, antecedents and consequents.
// And/Or keep at least two children; Not keeps exactly one.
struct SituationExpr {
  enum class Kind { True, Predicate, And, Or, Not, Comparison };
  using PredicateArg = std::variant<ValueExprPtr, SituationExprPtr>;

  Kind kind = Kind::True;
  std::string predicate;                    // Kind::Predicate
  std::vector<PredicateArg> args;           // Kind::Predicate
  std::vector<SituationExprPtr> children;   // And / Or / Not
  ComparisonOp cmp = ComparisonOp::Eq;      // Kind::Comparison
  ValueExprPtr lhs, rhs;                    // Kind::Comparison
  SourceSpan span;
};

SituationExprPtr make_true(SourceSpan span = {});
SituationExprPtr make_predicate(std::string name, std::vector<SituationExpr::PredicateArg> args,
                                SourceSpan span = {});
SituationExprPtr make_and(std::vector<SituationExprPtr> children, SourceSpan span = {});
SituationExprPtr make_or(std::vector<SituationExprPtr> children, SourceSpan span = {});
SituationExprPtr make_not(SituationExprPtr child, SourceSpan span = {});
SituationExprPtr make_comparison(ComparisonOp op, ValueExprPtr lhs, ValueExprPtr rhs,
                                 SourceSpan span = {});

// --- Domain model ---------------------------------------------------------

struct Attribute {
  std::string name;
  std::string type_name;
  bool is_env = false;  // marked with Env: bound by the runtime environment
  SourceSpan span;
};

// Derived = "isA <otherConcept>"; the root kind is resolved by the linter.
enum class ConceptKind { Role, Asset, Event, Enumeration, Derived };

std::string_view concept_kind_text(ConceptKind kind);

struct DomainConcept {
  std::string name;
  ConceptKind kind = ConceptKind::Role;
  std::string parent;                     // Derived only
  std::vector<Attribute> attributes;      // not for Enumeration
  std::vector<std::string> enum_literals; // Enumeration only
  SourceSpan span;
};

struct DomainModel {
  std::string name;  // empty when the document has no Domain block
  std::vector<DomainConcept> concepts;
  SourceSpan span;
};

// --- Contract body --------------------------------------------------------

struct Parameter {
  std::string name;
  std::string type_name;
  ValueExprPtr initializer;  // tolerated by the parser, rejected by lint
  SourceSpan span;
};

// One "attr := value" entry; an empty attribute name records the bare
// ":= value" form used to give a declaration a direct initial value.
struct AttributeInit {
  std::string attribute;
  ValueExprPtr value;
  SourceSpan span;
};

// Section a statement was written in. Distinct from the report-level Section
// buckets: this is the syntactic home, kept so misplaced statements survive
// round-trips and can be flagged.
enum class SourceSection {
  Declarations,
  Preconditions,
  Postconditions,
  Obligations,
  SurvivingObligations,
  Powers,
  Constraints,
};

std::string_view source_section_keyword(SourceSection s);

struct Declaration {
  std::string name;
  std::string type_name;
  std::vector<AttributeInit> initializers;
  SourceSection home = SourceSection::Declarations;
  SourceSpan span;
};

enum class NormKind { Obligation, Power };

// name: [trigger ->] Obligation|Power(party, party, antecedent, consequent)
struct Norm {
  std::string name;
  NormKind kind = NormKind::Obligation;
  SituationExprPtr trigger;  // optional
  ValueExprPtr first_party;
  ValueExprPtr second_party;
  SituationExprPtr antecedent;
  SituationExprPtr consequent;
  SourceSection home = SourceSection::Obligations;
  SourceSpan span;
};

struct ContractSpec {
  DomainModel domain;
  std::string name;  // contract name; empty when no Contract header was seen
  std::vector<Parameter> signature;
  std::vector<Declaration> declarations;  // includes strays from norm sections
  std::vector<SituationExprPtr> preconditions;
  std::vector<SituationExprPtr> postconditions;
  std::vector<Norm> obligations;            // home Obligations (plus stray
  std::vector<Norm> surviving_obligations;  //   norms from Declarations, by
  std::vector<Norm> powers;                 //   kind)
  std::vector<SituationExprPtr> constraints;
  bool fragment = false;  // parsed as a section fragment, not a full document
  SourceSpan span;
};

// --- Deep copy and structural equality ------------------------------------

ValueExprPtr clone(const ValueExpr& e);
SituationExprPtr clone(const SituationExpr& e);

// Span-insensitive comparison; everything else (names, kinds, order,
// sections, expression shape) must match.
bool structurally_equal(const ValueExpr& a, const ValueExpr& b);
bool structurally_equal(const SituationExpr& a, const SituationExpr& b);
bool structurally_equal(const ContractSpec& a, const ContractSpec& b);

// Calls fn once per AST node span under the given spec (root included).
void visit_spans(const ContractSpec& spec, const std::function<void(const SourceSpan&)>& fn);

}  // namespace symboleo
