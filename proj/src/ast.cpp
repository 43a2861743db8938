#include "symboleo/ast.hpp"

#include <sstream>

namespace symboleo {

std::string_view binary_op_text(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
  }
  return "";
}

std::string_view comparison_op_text(ComparisonOp op) {
  switch (op) {
    case ComparisonOp::Eq: return "==";
    case ComparisonOp::Ne: return "!=";
    case ComparisonOp::Lt: return "<";
    case ComparisonOp::Le: return "<=";
    case ComparisonOp::Gt: return ">";
    case ComparisonOp::Ge: return ">=";
  }
  return "";
}

std::string_view concept_kind_text(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Role: return "Role";
    case ConceptKind::Asset: return "Asset";
    case ConceptKind::Event: return "Event";
    case ConceptKind::Enumeration: return "Enumeration";
    case ConceptKind::Derived: return "";
  }
  return "";
}

std::string_view source_section_keyword(SourceSection s) {
  switch (s) {
    case SourceSection::Declarations: return "Declarations";
    case SourceSection::Preconditions: return "Preconditions";
    case SourceSection::Postconditions: return "Postconditions";
    case SourceSection::Obligations: return "Obligations";
    case SourceSection::SurvivingObligations: return "SurvivingObligations";
    case SourceSection::Powers: return "Powers";
    case SourceSection::Constraints: return "Constraints";
  }
  return "";
}

std::string ValueExpr::path_text() const {
  std::ostringstream out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out << '.';
    out << path[i];
  }
  return out.str();
}

ValueExprPtr make_path(std::vector<std::string> segments, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::Path;
  e->path = std::move(segments);
  e->span = span;
  return e;
}

ValueExprPtr make_number(std::string lexeme, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::Number;
  e->literal = std::move(lexeme);
  e->span = span;
  return e;
}

ValueExprPtr make_string(std::string value, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::String;
  e->literal = std::move(value);
  e->span = span;
  return e;
}

ValueExprPtr make_date(std::string iso_text, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::Date;
  e->literal = std::move(iso_text);
  e->span = span;
  return e;
}

ValueExprPtr make_bool(bool value, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::Bool;
  e->bool_value = value;
  e->span = span;
  return e;
}

ValueExprPtr make_binary(BinaryOp op, ValueExprPtr lhs, ValueExprPtr rhs, SourceSpan span) {
  auto e = std::make_unique<ValueExpr>();
  e->kind = ValueExpr::Kind::Binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->span = span;
  return e;
}

SituationExprPtr make_true(SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::True;
  e->span = span;
  return e;
}

SituationExprPtr make_predicate(std::string name, std::vector<SituationExpr::PredicateArg> args,
                                SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::Predicate;
  e->predicate = std::move(name);
  e->args = std::move(args);
  e->span = span;
  return e;
}

SituationExprPtr make_and(std::vector<SituationExprPtr> children, SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::And;
  e->children = std::move(children);
  e->span = span;
  return e;
}

SituationExprPtr make_or(std::vector<SituationExprPtr> children, SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::Or;
  e->children = std::move(children);
  e->span = span;
  return e;
}

SituationExprPtr make_not(SituationExprPtr child, SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::Not;
  e->children.push_back(std::move(child));
  e->span = span;
  return e;
}

SituationExprPtr make_comparison(ComparisonOp op, ValueExprPtr lhs, ValueExprPtr rhs,
                                 SourceSpan span) {
  auto e = std::make_unique<SituationExpr>();
  e->kind = SituationExpr::Kind::Comparison;
  e->cmp = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  e->span = span;
  return e;
}

ValueExprPtr clone(const ValueExpr& e) {
  auto out = std::make_unique<ValueExpr>();
  out->kind = e.kind;
  out->path = e.path;
  out->literal = e.literal;
  out->bool_value = e.bool_value;
  out->op = e.op;
  if (e.lhs) out->lhs = clone(*e.lhs);
  if (e.rhs) out->rhs = clone(*e.rhs);
  out->span = e.span;
  return out;
}

SituationExprPtr clone(const SituationExpr& e) {
  auto out = std::make_unique<SituationExpr>();
  out->kind = e.kind;
  out->predicate = e.predicate;
  for (const auto& arg : e.args) {
    if (std::holds_alternative<ValueExprPtr>(arg)) {
      out->args.emplace_back(clone(*std::get<ValueExprPtr>(arg)));
    } else {
      out->args.emplace_back(clone(*std::get<SituationExprPtr>(arg)));
    }
  }
  for (const auto& child : e.children) out->children.push_back(clone(*child));
  out->cmp = e.cmp;
  if (e.lhs) out->lhs = clone(*e.lhs);
  if (e.rhs) out->rhs = clone(*e.rhs);
  out->span = e.span;
  return out;
}

namespace {

bool eq_opt(const ValueExprPtr& a, const ValueExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool eq_opt(const SituationExprPtr& a, const SituationExprPtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool eq(const Attribute& a, const Attribute& b) {
  return a.name == b.name && a.type_name == b.type_name && a.is_env == b.is_env;
}

bool eq(const DomainConcept& a, const DomainConcept& b) {
  if (a.name != b.name || a.kind != b.kind || a.parent != b.parent) return false;
  if (a.attributes.size() != b.attributes.size()) return false;
  for (size_t i = 0; i < a.attributes.size(); ++i)
    if (!eq(a.attributes[i], b.attributes[i])) return false;
  return a.enum_literals == b.enum_literals;
}

bool eq(const Parameter& a, const Parameter& b) {
  return a.name == b.name && a.type_name == b.type_name && eq_opt(a.initializer, b.initializer);
}

bool eq(const AttributeInit& a, const AttributeInit& b) {
  return a.attribute == b.attribute && eq_opt(a.value, b.value);
}

bool eq(const Declaration& a, const Declaration& b) {
  if (a.name != b.name || a.type_name != b.type_name || a.home != b.home) return false;
  if (a.initializers.size() != b.initializers.size()) return false;
  for (size_t i = 0; i < a.initializers.size(); ++i)
    if (!eq(a.initializers[i], b.initializers[i])) return false;
  return true;
}

bool eq(const Norm& a, const Norm& b) {
  return a.name == b.name && a.kind == b.kind && a.home == b.home &&
         eq_opt(a.trigger, b.trigger) && eq_opt(a.first_party, b.first_party) &&
         eq_opt(a.second_party, b.second_party) && eq_opt(a.antecedent, b.antecedent) &&
         eq_opt(a.consequent, b.consequent);
}

bool eq_exprs(const std::vector<SituationExprPtr>& a, const std::vector<SituationExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(*a[i], *b[i])) return false;
  return true;
}

}  // namespace

bool structurally_equal(const ValueExpr& a, const ValueExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ValueExpr::Kind::Path: return a.path == b.path;
    case ValueExpr::Kind::Number:
    case ValueExpr::Kind::String:
    case ValueExpr::Kind::Date: return a.literal == b.literal;
    case ValueExpr::Kind::Bool: return a.bool_value == b.bool_value;
    case ValueExpr::Kind::Binary:
      return a.op == b.op && eq_opt(a.lhs, b.lhs) && eq_opt(a.rhs, b.rhs);
  }
  return false;
}

bool structurally_equal(const SituationExpr& a, const SituationExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case SituationExpr::Kind::True: return true;
    case SituationExpr::Kind::Predicate: {
      if (a.predicate != b.predicate || a.args.size() != b.args.size()) return false;
      for (size_t i = 0; i < a.args.size(); ++i) {
        const auto& x = a.args[i];
        const auto& y = b.args[i];
        if (x.index() != y.index()) return false;
        if (std::holds_alternative<ValueExprPtr>(x)) {
          if (!structurally_equal(*std::get<ValueExprPtr>(x), *std::get<ValueExprPtr>(y)))
            return false;
        } else if (!structurally_equal(*std::get<SituationExprPtr>(x),
                                       *std::get<SituationExprPtr>(y))) {
          return false;
        }
      }
      return true;
    }
    case SituationExpr::Kind::And:
    case SituationExpr::Kind::Or:
    case SituationExpr::Kind::Not: {
      if (a.children.size() != b.children.size()) return false;
      for (size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
      return true;
    }
    case SituationExpr::Kind::Comparison:
      return a.cmp == b.cmp && eq_opt(a.lhs, b.lhs) && eq_opt(a.rhs, b.rhs);
  }
  return false;
}

bool structurally_equal(const ContractSpec& a, const ContractSpec& b) {
  if (a.domain.name != b.domain.name) return false;
  if (a.domain.concepts.size() != b.domain.concepts.size()) return false;
  for (size_t i = 0; i < a.domain.concepts.size(); ++i)
    if (!eq(a.domain.concepts[i], b.domain.concepts[i])) return false;
  if (a.name != b.name || a.fragment != b.fragment) return false;
  if (a.signature.size() != b.signature.size()) return false;
  for (size_t i = 0; i < a.signature.size(); ++i)
    if (!eq(a.signature[i], b.signature[i])) return false;
  if (a.declarations.size() != b.declarations.size()) return false;
  for (size_t i = 0; i < a.declarations.size(); ++i)
    if (!eq(a.declarations[i], b.declarations[i])) return false;
  if (!eq_exprs(a.preconditions, b.preconditions)) return false;
  if (!eq_exprs(a.postconditions, b.postconditions)) return false;
  auto eq_norms = [](const std::vector<Norm>& x, const std::vector<Norm>& y) {
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!eq(x[i], y[i])) return false;
    return true;
  };
  if (!eq_norms(a.obligations, b.obligations)) return false;
  if (!eq_norms(a.surviving_obligations, b.surviving_obligations)) return false;
  if (!eq_norms(a.powers, b.powers)) return false;
  return eq_exprs(a.constraints, b.constraints);
}

namespace {

using SpanFn = std::function<void(const SourceSpan&)>;

void walk(const ValueExpr& e, const SpanFn& fn) {
  fn(e.span);
  if (e.lhs) walk(*e.lhs, fn);
  if (e.rhs) walk(*e.rhs, fn);
}

void walk(const SituationExpr& e, const SpanFn& fn) {
  fn(e.span);
  for (const auto& arg : e.args) {
    if (std::holds_alternative<ValueExprPtr>(arg)) {
      walk(*std::get<ValueExprPtr>(arg), fn);
    } else {
      walk(*std::get<SituationExprPtr>(arg), fn);
    }
  }
  for (const auto& child : e.children) walk(*child, fn);
  if (e.lhs) walk(*e.lhs, fn);
  if (e.rhs) walk(*e.rhs, fn);
}

void walk(const Norm& n, const SpanFn& fn) {
  fn(n.span);
  if (n.trigger) walk(*n.trigger, fn);
  if (n.first_party) walk(*n.first_party, fn);
  if (n.second_party) walk(*n.second_party, fn);
  if (n.antecedent) walk(*n.antecedent, fn);
  if (n.consequent) walk(*n.consequent, fn);
}

}  // namespace

void visit_spans(const ContractSpec& spec, const SpanFn& fn) {
  fn(spec.span);
  if (!spec.domain.name.empty() || !spec.domain.concepts.empty()) fn(spec.domain.span);
  for (const auto& c : spec.domain.concepts) {
    fn(c.span);
    for (const auto& a : c.attributes) fn(a.span);
  }
  for (const auto& p : spec.signature) {
    fn(p.span);
    if (p.initializer) walk(*p.initializer, fn);
  }
  for (const auto& d : spec.declarations) {
    fn(d.span);
    for (const auto& init : d.initializers) {
      fn(init.span);
      if (init.value) walk(*init.value, fn);
    }
  }
  for (const auto& e : spec.preconditions) walk(*e, fn);
  for (const auto& e : spec.postconditions) walk(*e, fn);
  for (const auto& n : spec.obligations) walk(n, fn);
  for (const auto& n : spec.surviving_obligations) walk(n, fn);
  for (const auto& n : spec.powers) walk(n, fn);
  for (const auto& e : spec.constraints) walk(*e, fn);
}

}  // namespace symboleo
