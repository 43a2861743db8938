#include "symboleo/printer.hpp"

#include <sstream>

namespace symboleo {

namespace {

void print_value(std::ostream& out, const ValueExpr& e);
void print_situation(std::ostream& out, const SituationExpr& e);

int value_precedence(const ValueExpr& e) {
  if (e.kind != ValueExpr::Kind::Binary) return 2;
  switch (e.op) {
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod: return 1;
    default: return 0;
  }
}

void print_quoted(std::ostream& out, const std::string& text) {
  out << '"';
  for (char c : text) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      default: out << c; break;
    }
  }
  out << '"';
}

void print_value_child(std::ostream& out, const ValueExpr& child, int parent_prec,
                       bool is_right) {
  int prec = value_precedence(child);
  bool parens = prec < parent_prec || (is_right && prec == parent_prec &&
                                       child.kind == ValueExpr::Kind::Binary);
  if (parens) out << '(';
  print_value(out, child);
  if (parens) out << ')';
}

void print_value(std::ostream& out, const ValueExpr& e) {
  switch (e.kind) {
    case ValueExpr::Kind::Path: {
      for (size_t i = 0; i < e.path.size(); ++i) {
        if (i) out << '.';
        out << e.path[i];
      }
      return;
    }
    case ValueExpr::Kind::Number:
    case ValueExpr::Kind::Date:
      out << e.literal;
      return;
    case ValueExpr::Kind::String:
      print_quoted(out, e.literal);
      return;
    case ValueExpr::Kind::Bool:
      out << (e.bool_value ? "true" : "false");
      return;
    case ValueExpr::Kind::Binary: {
      int prec = value_precedence(e);
      print_value_child(out, *e.lhs, prec, false);
      out << ' ' << binary_op_text(e.op) << ' ';
      print_value_child(out, *e.rhs, prec, true);
      return;
    }
  }
}

// Children of an n-ary connective are parenthesised when printing them bare
// would re-associate: an Or below an Or, an And below an And, or an Or below
// an And (precedence).
void print_connective_child(std::ostream& out, const SituationExpr& child, bool parent_is_and) {
  bool parens = child.kind == SituationExpr::Kind::Or ||
                (parent_is_and && child.kind == SituationExpr::Kind::And);
  if (parens) out << '(';
  print_situation(out, child);
  if (parens) out << ')';
}

void print_situation(std::ostream& out, const SituationExpr& e) {
  switch (e.kind) {
    case SituationExpr::Kind::True:
      out << "true";
      return;
    case SituationExpr::Kind::Predicate: {
      out << e.predicate << '(';
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out << ", ";
        if (std::holds_alternative<ValueExprPtr>(e.args[i])) {
          print_value(out, *std::get<ValueExprPtr>(e.args[i]));
        } else {
          print_situation(out, *std::get<SituationExprPtr>(e.args[i]));
        }
      }
      out << ')';
      return;
    }
    case SituationExpr::Kind::And:
    case SituationExpr::Kind::Or: {
      bool is_and = e.kind == SituationExpr::Kind::And;
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << (is_and ? " and " : " or ");
        print_connective_child(out, *e.children[i], is_and);
      }
      return;
    }
    case SituationExpr::Kind::Not:
      out << "not(";
      print_situation(out, *e.children.front());
      out << ')';
      return;
    case SituationExpr::Kind::Comparison:
      print_value(out, *e.lhs);
      out << ' ' << comparison_op_text(e.cmp) << ' ';
      print_value(out, *e.rhs);
      return;
  }
}

// "isAn" before a vowel ("isAn Event"), otherwise "isA".
std::string_view is_a_word(std::string_view next_word) {
  if (next_word.empty()) return "isA";
  switch (next_word.front()) {
    case 'A': case 'E': case 'I': case 'O': case 'U':
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return "isAn";
    default:
      return "isA";
  }
}

void print_concept(std::ostream& out, const DomainConcept& c, const std::string& indent) {
  out << indent << c.name << ' ';
  std::string_view kind_word =
      c.kind == ConceptKind::Derived ? std::string_view(c.parent) : concept_kind_text(c.kind);
  out << is_a_word(kind_word) << ' ' << kind_word;
  if (c.kind == ConceptKind::Enumeration) {
    out << '(';
    for (size_t i = 0; i < c.enum_literals.size(); ++i) {
      if (i) out << ", ";
      out << c.enum_literals[i];
    }
    out << ')';
  } else if (!c.attributes.empty()) {
    out << " with ";
    for (size_t i = 0; i < c.attributes.size(); ++i) {
      if (i) out << ", ";
      const Attribute& a = c.attributes[i];
      if (a.is_env) out << "Env ";
      out << a.name << ": " << a.type_name;
    }
  }
  out << ";\n";
}

void print_declaration(std::ostream& out, const Declaration& d, const std::string& indent) {
  out << indent << d.name << ": " << d.type_name;
  if (d.initializers.size() == 1 && d.initializers.front().attribute.empty()) {
    out << " := ";
    print_value(out, *d.initializers.front().value);
  } else if (!d.initializers.empty()) {
    out << " with ";
    for (size_t i = 0; i < d.initializers.size(); ++i) {
      if (i) out << ", ";
      out << d.initializers[i].attribute << " := ";
      print_value(out, *d.initializers[i].value);
    }
  }
  out << ";\n";
}

void print_norm(std::ostream& out, const Norm& n, const std::string& indent) {
  out << indent << n.name << ": ";
  if (n.trigger) {
    print_situation(out, *n.trigger);
    out << " -> ";
  }
  out << (n.kind == NormKind::Obligation ? "Obligation" : "Power") << '(';
  print_value(out, *n.first_party);
  out << ", ";
  print_value(out, *n.second_party);
  out << ", ";
  print_situation(out, *n.antecedent);
  out << ", ";
  print_situation(out, *n.consequent);
  out << ");\n";
}

struct SectionPrinter {
  std::ostream& out;
  const ContractSpec& spec;
  std::string head_indent;
  std::string body_indent;

  void section(SourceSection home) {
    std::vector<const Declaration*> decls;
    for (const auto& d : spec.declarations)
      if (d.home == home) decls.push_back(&d);
    std::vector<const Norm*> norms;
    auto collect = [&](const std::vector<Norm>& list) {
      for (const auto& n : list)
        if (n.home == home) norms.push_back(&n);
    };
    collect(spec.obligations);
    collect(spec.surviving_obligations);
    collect(spec.powers);

    const std::vector<SituationExprPtr>* exprs = nullptr;
    if (home == SourceSection::Preconditions) exprs = &spec.preconditions;
    if (home == SourceSection::Postconditions) exprs = &spec.postconditions;
    if (home == SourceSection::Constraints) exprs = &spec.constraints;

    bool empty = decls.empty() && norms.empty() && (!exprs || exprs->empty());
    if (empty) return;

    out << head_indent << source_section_keyword(home) << '\n';
    if (home == SourceSection::Declarations) {
      for (const Declaration* d : decls) print_declaration(out, *d, body_indent);
      for (const Norm* n : norms) print_norm(out, *n, body_indent);
    } else {
      for (const Norm* n : norms) print_norm(out, *n, body_indent);
      for (const Declaration* d : decls) print_declaration(out, *d, body_indent);
    }
    if (exprs) {
      for (const auto& e : *exprs) {
        out << body_indent;
        print_situation(out, *e);
        out << ";\n";
      }
    }
  }
};

}  // namespace

std::string format(const ContractSpec& spec) {
  std::ostringstream out;
  if (!spec.domain.name.empty() || !spec.domain.concepts.empty()) {
    out << "Domain " << (spec.domain.name.empty() ? "_" : spec.domain.name) << '\n';
    for (const auto& c : spec.domain.concepts) print_concept(out, c, "  ");
    out << "endDomain\n";
  }
  bool has_header = !spec.name.empty();
  if (has_header) {
    out << "Contract " << spec.name << " (";
    for (size_t i = 0; i < spec.signature.size(); ++i) {
      if (i) out << ", ";
      const Parameter& p = spec.signature[i];
      out << p.name << ": " << p.type_name;
      if (p.initializer) {
        out << " := ";
        print_value(out, *p.initializer);
      }
    }
    out << ")\n";
  }
  SectionPrinter printer{out, spec, has_header ? "  " : "", has_header ? "    " : "  "};
  printer.section(SourceSection::Declarations);
  printer.section(SourceSection::Preconditions);
  printer.section(SourceSection::Postconditions);
  printer.section(SourceSection::Obligations);
  printer.section(SourceSection::SurvivingObligations);
  printer.section(SourceSection::Powers);
  printer.section(SourceSection::Constraints);
  return out.str();
}

std::string format(const SituationExpr& expr) {
  std::ostringstream out;
  print_situation(out, expr);
  return out.str();
}

std::string format(const ValueExpr& expr) {
  std::ostringstream out;
  print_value(out, expr);
  return out.str();
}

}  // namespace symboleo
