#include "symboleo/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symboleo/lexer.hpp"

namespace symboleo {

namespace {

bool is_section_keyword(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  return t.lexeme == "Declarations" || t.lexeme == "Preconditions" ||
         t.lexeme == "Postconditions" || t.lexeme == "Obligations" ||
         t.lexeme == "SurvivingObligations" || t.lexeme == "Powers" ||
         t.lexeme == "Constraints";
}

bool is_boundary(const Token& t) {
  return t.kind == TokenKind::Eof || is_section_keyword(t) ||
         t.is_keyword("endDomain") || t.is_keyword("Contract") || t.is_keyword("Domain");
}

SourceSection section_for_keyword(std::string_view word) {
  if (word == "Declarations") return SourceSection::Declarations;
  if (word == "Preconditions") return SourceSection::Preconditions;
  if (word == "Postconditions") return SourceSection::Postconditions;
  if (word == "Obligations") return SourceSection::Obligations;
  if (word == "SurvivingObligations") return SourceSection::SurvivingObligations;
  if (word == "Powers") return SourceSection::Powers;
  return SourceSection::Constraints;
}

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

bool looks_like_end_marker(const Token& t) {
  if (t.kind != TokenKind::Identifier || t.lexeme.size() < 4) return false;
  return t.lexeme.compare(0, 3, "end") == 0 &&
         std::isupper(static_cast<unsigned char>(t.lexeme[3]));
}

class Parser {
 public:
  Parser(std::string_view source, const ParseOptions& options)
      : options_(options), lex_(tokenize(source)) {
    for (auto& d : lex_.diagnostics) diagnostics_.push_back(d);
  }

  ParseResult run() {
    bool fragment = options_.mode == ParseMode::Fragment;
    if (options_.mode == ParseMode::Auto) fragment = is_section_keyword(peek());
    spec_.fragment = fragment;

    if (!fragment && peek().is_keyword("Domain")) parse_domain();
    if (!fragment && peek().is_keyword("Contract")) parse_contract_header();
    parse_sections();

    // Leftover tokens after all sections (stray endDomain, extra Domain...):
    // report, step over, and keep collecting any sections that follow.
    while (peek().kind != TokenKind::Eof) {
      error_here("unexpected trailing input");
      advance();
      parse_sections();
    }

    ParseResult result;
    bool saw_anything = !spec_.domain.name.empty() || !spec_.name.empty() ||
                        saw_section_ || !spec_.domain.concepts.empty();
    if (saw_anything) {
      spec_.span = cover_all();
      result.spec = std::move(spec_);
    } else if (diagnostics_.empty()) {
      Diagnostic d;
      d.type = ErrorType::IncorrectSyntax;
      d.section = Section::ContractStructure;
      d.message = "no Symboleo content found";
      diagnostics_.push_back(std::move(d));
    }
    rebucket_lexer_diagnostics();
    std::stable_sort(diagnostics_.begin(), diagnostics_.end(), diagnostic_before);
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  // --- token cursor -------------------------------------------------------

  const Token& peek(int ahead = 0) {
    size_t i = pos_;
    int seen = 0;
    while (i < lex_.tokens.size()) {
      const Token& t = lex_.tokens[i];
      if (t.kind != TokenKind::Comment) {
        if (seen == ahead) return t;
        ++seen;
      }
      ++i;
    }
    return lex_.tokens.back();  // Eof
  }

  const Token& advance() {
    while (pos_ < lex_.tokens.size() && lex_.tokens[pos_].kind == TokenKind::Comment) ++pos_;
    const Token& t = lex_.tokens[pos_];
    if (pos_ + 1 < lex_.tokens.size()) ++pos_;
    return t;
  }

  bool accept_punct(std::string_view text) {
    if (peek().is_punct(text)) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_op(std::string_view text) {
    if (peek().is_op(text)) {
      advance();
      return true;
    }
    return false;
  }

  bool accept_keyword(std::string_view text) {
    if (peek().is_keyword(text)) {
      advance();
      return true;
    }
    return false;
  }

  // --- diagnostics and recovery ------------------------------------------

  void diagnose(ErrorType type, SourceSpan span, const std::string& message) {
    Diagnostic d;
    d.type = type;
    d.section = current_bucket_;
    d.span = span;
    d.message = message;
    diagnostics_.push_back(std::move(d));
  }

  void error_here(const std::string& message) {
    std::ostringstream msg;
    msg << message;
    const Token& t = peek();
    if (t.kind == TokenKind::Eof) {
      msg << " (at end of input)";
    } else {
      msg << " (found '" << t.lexeme << "')";
    }
    diagnose(ErrorType::IncorrectSyntax, t.span, msg.str());
  }

  // Consume to just past the next ';', stopping short of section boundaries.
  // Always consumes at least one token unless already at a boundary.
  void skip_statement() {
    if (!is_boundary(peek()) && !peek().is_punct(";")) advance();
    while (!is_boundary(peek())) {
      if (peek().is_punct(";")) {
        advance();
        return;
      }
      advance();
    }
  }

  bool expect_punct(std::string_view text, const std::string& what) {
    if (accept_punct(text)) return true;
    error_here("expected '" + std::string(text) + "' " + what);
    return false;
  }

  void expect_semicolon() {
    if (accept_punct(";")) return;
    error_here("expected ';'");
    skip_statement();
  }

  // --- document structure -------------------------------------------------

  void parse_domain() {
    const Token& kw = advance();  // Domain
    current_bucket_ = Section::Domain;
    SourceSpan span = kw.span;
    if (peek().kind == TokenKind::Identifier) {
      spec_.domain.name = advance().lexeme;
    } else {
      error_here("expected domain name");
      spec_.domain.name = "_";
    }
    while (!peek().is_keyword("endDomain") && peek().kind != TokenKind::Eof &&
           !peek().is_keyword("Contract")) {
      if (is_section_keyword(peek())) break;  // missing endDomain
      parse_concept();
    }
    if (!accept_keyword("endDomain")) error_here("expected 'endDomain'");
    span = SourceSpan::cover(span, prev_span());
    spec_.domain.span = span;
    extents_.push_back({Section::Domain, span});
    current_bucket_ = Section::ContractStructure;
  }

  void parse_concept() {
    if (looks_like_end_marker(peek())) {
      error_here("spurious section end marker");
      advance();
      return;
    }
    DomainConcept node;
    node.span = peek().span;
    if (peek().kind != TokenKind::Identifier) {
      error_here("expected concept name");
      skip_statement();
      return;
    }
    node.name = advance().lexeme;
    accept_punct(":");  // optional, as in "Paid: isAn Event"
    if (!accept_keyword("isA") && !accept_keyword("isAn")) {
      error_here("expected 'isA' or 'isAn' after concept name");
      skip_statement();
      return;
    }
    if (peek().kind != TokenKind::Identifier) {
      error_here("expected concept kind");
      skip_statement();
      return;
    }
    std::string kind_word = advance().lexeme;
    if (kind_word == "Role") {
      node.kind = ConceptKind::Role;
    } else if (kind_word == "Asset") {
      node.kind = ConceptKind::Asset;
    } else if (kind_word == "Event") {
      node.kind = ConceptKind::Event;
    } else if (kind_word == "Enumeration") {
      node.kind = ConceptKind::Enumeration;
      parse_enum_literals(node);
    } else {
      node.kind = ConceptKind::Derived;
      node.parent = kind_word;
    }
    if (node.kind != ConceptKind::Enumeration) {
      accept_keyword("with");
      parse_attributes(node);
    }
    node.span = SourceSpan::cover(node.span, peek().span);
    expect_semicolon();
    node.span = SourceSpan::cover(node.span, prev_span());
    spec_.domain.concepts.push_back(std::move(node));
  }

  void parse_enum_literals(DomainConcept& node) {
    if (!expect_punct("(", "to open enumeration literals")) return;
    while (peek().kind == TokenKind::Identifier) {
      node.enum_literals.push_back(advance().lexeme);
      if (!accept_punct(",")) break;
    }
    expect_punct(")", "to close enumeration literals");
  }

  void parse_attributes(DomainConcept& node) {
    if (peek().is_punct(";") || is_boundary(peek())) return;
    while (true) {
      Attribute attr;
      attr.span = peek().span;
      if (accept_keyword("Env")) attr.is_env = true;
      if (peek().kind != TokenKind::Identifier) {
        error_here("expected attribute name");
        return;
      }
      attr.name = advance().lexeme;
      if (!expect_punct(":", "after attribute name")) return;
      if (peek().kind != TokenKind::Identifier) {
        error_here("expected attribute type");
        return;
      }
      attr.type_name = advance().lexeme;
      attr.span = SourceSpan::cover(attr.span, prev_span());
      node.attributes.push_back(std::move(attr));
      if (!accept_punct(",")) break;
    }
  }

  void parse_contract_header() {
    advance();  // Contract
    current_bucket_ = Section::ContractStructure;
    if (peek().kind == TokenKind::Identifier) {
      spec_.name = advance().lexeme;
    } else {
      error_here("expected contract name");
      spec_.name = "_";
    }
    if (peek().is_punct("(")) {
      current_bucket_ = Section::Signature;
      SourceSpan sig_span = peek().span;
      advance();
      if (!peek().is_punct(")")) parse_parameters();
      if (!accept_punct(")")) {
        error_here("expected ')' to close the contract signature");
        while (!is_boundary(peek()) && !peek().is_punct(")")) advance();
        accept_punct(")");
      }
      extents_.push_back({Section::Signature, SourceSpan::cover(sig_span, prev_span())});
      current_bucket_ = Section::ContractStructure;
    } else {
      error_here("expected '(' to open the contract signature");
    }
  }

  void parse_parameters() {
    while (true) {
      Parameter param;
      param.span = peek().span;
      if (peek().kind != TokenKind::Identifier) {
        error_here("expected parameter name");
        return;
      }
      param.name = advance().lexeme;
      if (!expect_punct(":", "after parameter name")) return;
      if (peek().kind != TokenKind::Identifier) {
        error_here("expected parameter type");
        return;
      }
      param.type_name = advance().lexeme;
      if (accept_op(":=")) param.initializer = parse_value();
      param.span = SourceSpan::cover(param.span, prev_span());
      spec_.signature.push_back(std::move(param));
      if (!accept_punct(",")) return;
    }
  }

  void parse_sections() {
    while (true) {
      const Token& t = peek();
      if (t.kind == TokenKind::Eof) return;
      if (is_section_keyword(t)) {
        SourceSection section = section_for_keyword(t.lexeme);
        SourceSpan span = t.span;
        advance();
        saw_section_ = true;
        current_bucket_ = bucket_for(section);
        parse_section_body(section);
        extents_.push_back({bucket_for(section), SourceSpan::cover(span, prev_span())});
        current_bucket_ = Section::ContractStructure;
        continue;
      }
      if (t.is_keyword("Domain") || t.is_keyword("Contract") || t.is_keyword("endDomain"))
        return;  // handled (or reported) by run()
      if (looks_like_end_marker(t)) {
        error_here("spurious section end marker");
        advance();
        continue;
      }
      error_here("expected a section keyword");
      skip_statement();
      if (peek().kind == TokenKind::Eof) return;
    }
  }

  void parse_section_body(SourceSection section) {
    while (true) {
      const Token& t = peek();
      if (is_boundary(t)) return;
      if (t.is_punct(";")) {  // stray semicolon: tolerate silently? no — flag
        error_here("empty statement");
        advance();
        continue;
      }
      if (looks_like_end_marker(t)) {
        error_here("spurious section end marker");
        advance();
        continue;
      }
      switch (section) {
        case SourceSection::Preconditions:
        case SourceSection::Postconditions:
        case SourceSection::Constraints: {
          SituationExprPtr expr = parse_situation();
          expect_semicolon();
          if (section == SourceSection::Preconditions) {
            spec_.preconditions.push_back(std::move(expr));
          } else if (section == SourceSection::Postconditions) {
            spec_.postconditions.push_back(std::move(expr));
          } else {
            spec_.constraints.push_back(std::move(expr));
          }
          break;
        }
        default:
          parse_named_statement(section);
          break;
      }
    }
  }

  // Declarations and the three norm sections share the "name : ..." shape;
  // look ahead for a norm marker (Obligation/Power keyword, or O/P followed
  // by '(') to pick the production.
  void parse_named_statement(SourceSection section) {
    if (peek().kind != TokenKind::Identifier) {
      error_here("expected a name to start the statement");
      skip_statement();
      return;
    }
    if (statement_is_norm()) {
      parse_norm(section);
    } else {
      parse_declaration(section);
    }
  }

  bool statement_is_norm() {
    // Scan the rest of the statement without consuming.
    int ahead = 0;
    while (true) {
      const Token& t = peek(ahead);
      if (t.kind == TokenKind::Eof || t.is_punct(";") || is_boundary(t)) return false;
      if (t.is_keyword("Obligation") || t.is_keyword("Power")) return true;
      if (t.kind == TokenKind::Identifier && (t.lexeme == "O" || t.lexeme == "P") &&
          peek(ahead + 1).is_punct("(")) {
        return true;
      }
      ++ahead;
    }
  }

  void parse_declaration(SourceSection section) {
    Declaration decl;
    decl.home = section;
    decl.span = peek().span;
    decl.name = advance().lexeme;
    if (!expect_punct(":", "after declaration name")) {
      skip_statement();
      return;
    }
    if (peek().kind != TokenKind::Identifier) {
      error_here("expected declaration type");
      skip_statement();
      return;
    }
    decl.type_name = advance().lexeme;
    if (accept_keyword("with")) {
      while (true) {
        AttributeInit init;
        init.span = peek().span;
        if (peek().kind != TokenKind::Identifier) {
          error_here("expected attribute name in initializer");
          break;
        }
        init.attribute = advance().lexeme;
        if (!accept_op(":=")) {
          error_here("expected ':=' in attribute initializer");
          break;
        }
        init.value = parse_value();
        init.span = SourceSpan::cover(init.span, prev_span());
        decl.initializers.push_back(std::move(init));
        if (!accept_punct(",")) break;
      }
    } else if (peek().is_op(":=")) {
      // Direct value form: "lateDelivery: Boolean := false".
      AttributeInit init;
      init.span = peek().span;
      advance();
      init.value = parse_value();
      init.span = SourceSpan::cover(init.span, prev_span());
      decl.initializers.push_back(std::move(init));
    }
    decl.span = SourceSpan::cover(decl.span, peek().span);
    expect_semicolon();
    decl.span = SourceSpan::cover(decl.span, prev_span());
    spec_.declarations.push_back(std::move(decl));
  }

  void parse_norm(SourceSection section) {
    Norm norm;
    norm.home = section;
    norm.span = peek().span;
    norm.name = advance().lexeme;
    if (!expect_punct(":", "after norm name")) {
      skip_statement();
      return;
    }
    // Optional trigger before '->'.
    if (!next_is_norm_keyword()) {
      norm.trigger = parse_situation();
      if (!accept_op("->")) {
        error_here("expected '->' after norm trigger");
        skip_statement();
        return;
      }
    }
    if (peek().is_keyword("Obligation") ||
        (peek().kind == TokenKind::Identifier && peek().lexeme == "O")) {
      norm.kind = NormKind::Obligation;
    } else if (peek().is_keyword("Power") ||
               (peek().kind == TokenKind::Identifier && peek().lexeme == "P")) {
      norm.kind = NormKind::Power;
    } else {
      error_here("expected 'Obligation' or 'Power'");
      skip_statement();
      return;
    }
    advance();
    if (!expect_punct("(", "to open the norm")) {
      skip_statement();
      return;
    }
    norm.first_party = parse_value();
    expect_punct(",", "after the first party");
    norm.second_party = parse_value();
    expect_punct(",", "after the second party");
    norm.antecedent = parse_situation();
    expect_punct(",", "after the antecedent");
    norm.consequent = parse_situation();
    if (!accept_punct(")")) {
      error_here("expected ')' to close the norm");
      skip_statement();
      store_norm(std::move(norm), section);
      return;
    }
    norm.span = SourceSpan::cover(norm.span, peek().span);
    expect_semicolon();
    norm.span = SourceSpan::cover(norm.span, prev_span());
    store_norm(std::move(norm), section);
  }

  bool next_is_norm_keyword() {
    const Token& t = peek();
    if (t.is_keyword("Obligation") || t.is_keyword("Power")) return true;
    return t.kind == TokenKind::Identifier && (t.lexeme == "O" || t.lexeme == "P") &&
           peek(1).is_punct("(");
  }

  void store_norm(Norm norm, SourceSection section) {
    switch (section) {
      case SourceSection::Obligations:
        spec_.obligations.push_back(std::move(norm));
        break;
      case SourceSection::SurvivingObligations:
        spec_.surviving_obligations.push_back(std::move(norm));
        break;
      case SourceSection::Powers:
        spec_.powers.push_back(std::move(norm));
        break;
      default:
        // A norm outside the norm sections: keep it, grouped by its keyword,
        // so the structure check can flag it.
        if (norm.kind == NormKind::Obligation) {
          spec_.obligations.push_back(std::move(norm));
        } else {
          spec_.powers.push_back(std::move(norm));
        }
        break;
    }
  }

  // --- expressions --------------------------------------------------------

  struct DepthGuard {
    Parser& p;
    bool ok;
    explicit DepthGuard(Parser& parser) : p(parser) {
      ok = ++p.depth_ <= p.options_.max_nesting_depth;
      if (!ok && !p.depth_reported_) {
        p.depth_reported_ = true;
        p.error_here("expression nesting exceeds the supported depth");
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  SituationExprPtr parse_situation() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_true(peek().span);
    SituationExprPtr first = parse_and_chain();
    if (!peek().is_keyword("or")) return first;
    std::vector<SituationExprPtr> children;
    SourceSpan span = first->span;
    children.push_back(std::move(first));
    while (accept_keyword("or")) children.push_back(parse_and_chain());
    span = SourceSpan::cover(span, children.back()->span);
    return make_or(std::move(children), span);
  }

  SituationExprPtr parse_and_chain() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_true(peek().span);
    SituationExprPtr first = parse_situation_unary();
    if (!peek().is_keyword("and")) return first;
    std::vector<SituationExprPtr> children;
    SourceSpan span = first->span;
    children.push_back(std::move(first));
    while (accept_keyword("and")) children.push_back(parse_situation_unary());
    span = SourceSpan::cover(span, children.back()->span);
    return make_and(std::move(children), span);
  }

  SituationExprPtr parse_situation_unary() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_true(peek().span);
    if (peek().is_keyword("not")) {
      SourceSpan span = peek().span;
      advance();
      SituationExprPtr child;
      if (accept_punct("(")) {
        child = parse_situation();
        expect_punct(")", "to close 'not'");
      } else {
        child = parse_situation_unary();
      }
      span = SourceSpan::cover(span, child->span);
      return make_not(std::move(child), span);
    }
    return parse_situation_primary();
  }

  SituationExprPtr parse_situation_primary() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_true(peek().span);
    const Token& t = peek();
    if (t.is_keyword("true") && !is_comparison_op(peek(1))) {
      advance();
      return make_true(t.span);
    }
    if (t.is_punct("(")) {
      // Either a parenthesised situation or a parenthesised value (as the
      // left side of a comparison). Try the situation reading first.
      size_t saved_pos = pos_;
      size_t saved_diags = diagnostics_.size();
      advance();
      SituationExprPtr inner = parse_situation();
      if (diagnostics_.size() == saved_diags && accept_punct(")") &&
          !is_comparison_op(peek())) {
        return inner;
      }
      pos_ = saved_pos;
      diagnostics_.resize(saved_diags);
      return parse_comparison_from_value();
    }
    if (t.kind == TokenKind::Identifier && peek(1).is_punct("(")) {
      return parse_predicate_call();
    }
    return parse_comparison_from_value();
  }

  bool is_comparison_op(const Token& t) {
    return t.is_op("==") || t.is_op("!=") || t.is_op("<") || t.is_op("<=") ||
           t.is_op(">") || t.is_op(">=");
  }

  SituationExprPtr parse_predicate_call() {
    const Token& name_tok = advance();
    SourceSpan span = name_tok.span;
    advance();  // '('
    std::vector<SituationExpr::PredicateArg> args;
    if (!peek().is_punct(")")) {
      while (true) {
        args.push_back(parse_predicate_arg());
        if (!accept_punct(",")) break;
      }
    }
    if (!accept_punct(")")) error_here("expected ')' to close '" + name_tok.lexeme + "'");
    span = SourceSpan::cover(span, prev_span());
    return make_predicate(name_tok.lexeme, std::move(args), span);
  }

  SituationExpr::PredicateArg parse_predicate_arg() {
    const Token& t = peek();
    if (t.is_keyword("not") || t.is_keyword("true")) {
      return SituationExpr::PredicateArg(parse_situation());
    }
    if (t.is_punct("(")) {
      // Parenthesised argument: attempt the situation reading, fall back to
      // a value.
      size_t saved_pos = pos_;
      size_t saved_diags = diagnostics_.size();
      SituationExprPtr situation = parse_situation();
      if (diagnostics_.size() == saved_diags &&
          (peek().is_punct(",") || peek().is_punct(")"))) {
        return SituationExpr::PredicateArg(std::move(situation));
      }
      pos_ = saved_pos;
      diagnostics_.resize(saved_diags);
      return SituationExpr::PredicateArg(parse_value());
    }
    if (t.kind == TokenKind::Identifier && peek(1).is_punct("(")) {
      SituationExprPtr nested = parse_predicate_call();
      // A nested call may still be the left side of a comparison? A call is
      // not a value in this grammar, so no: it stays a situation. But the
      // chain may continue with and/or inside the argument.
      return finish_situation_arg(std::move(nested));
    }
    ValueExprPtr value = parse_value();
    if (is_comparison_op(peek())) {
      ComparisonOp op = comparison_op_from(advance().lexeme);
      ValueExprPtr rhs = parse_value();
      SourceSpan span = SourceSpan::cover(value->span, rhs->span);
      return finish_situation_arg(make_comparison(op, std::move(value), std::move(rhs), span));
    }
    return SituationExpr::PredicateArg(std::move(value));
  }

  // Lets "Happens(x) and Happens(y)" appear as a single situation argument,
  // with the same and-over-or precedence as the section-level grammar.
  SituationExpr::PredicateArg finish_situation_arg(SituationExprPtr first) {
    SituationExprPtr left = finish_and_chain(std::move(first));
    if (!peek().is_keyword("or")) return SituationExpr::PredicateArg(std::move(left));
    std::vector<SituationExprPtr> children;
    SourceSpan span = left->span;
    children.push_back(std::move(left));
    while (accept_keyword("or")) {
      children.push_back(finish_and_chain(parse_situation_unary()));
    }
    span = SourceSpan::cover(span, children.back()->span);
    return SituationExpr::PredicateArg(make_or(std::move(children), span));
  }

  SituationExprPtr finish_and_chain(SituationExprPtr first) {
    if (!peek().is_keyword("and")) return first;
    std::vector<SituationExprPtr> children;
    SourceSpan span = first->span;
    children.push_back(std::move(first));
    while (accept_keyword("and")) children.push_back(parse_situation_unary());
    span = SourceSpan::cover(span, children.back()->span);
    return make_and(std::move(children), span);
  }

  SituationExprPtr parse_comparison_from_value() {
    ValueExprPtr value = parse_value();
    if (is_comparison_op(peek())) {
      ComparisonOp op = comparison_op_from(advance().lexeme);
      ValueExprPtr rhs = parse_value();
      SourceSpan span = SourceSpan::cover(value->span, rhs->span);
      return make_comparison(op, std::move(value), std::move(rhs), span);
    }
    // A bare value where a situation belongs: structurally tolerated as an
    // implicit "== true" but reported as a grammar deviation.
    SourceSpan span = value->span;
    diagnose(ErrorType::GrammarInconsistency, span,
             "value used where a situation is expected");
    return make_comparison(ComparisonOp::Eq, std::move(value), make_bool(true, span), span);
  }

  ComparisonOp comparison_op_from(const std::string& text) {
    if (text == "==") return ComparisonOp::Eq;
    if (text == "!=") return ComparisonOp::Ne;
    if (text == "<") return ComparisonOp::Lt;
    if (text == "<=") return ComparisonOp::Le;
    if (text == ">") return ComparisonOp::Gt;
    return ComparisonOp::Ge;
  }

  ValueExprPtr parse_value() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_number("0", peek().span);
    ValueExprPtr lhs = parse_term();
    while (peek().is_op("+") || peek().is_op("-")) {
      BinaryOp op = peek().is_op("+") ? BinaryOp::Add : BinaryOp::Sub;
      advance();
      ValueExprPtr rhs = parse_term();
      SourceSpan span = SourceSpan::cover(lhs->span, rhs->span);
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ValueExprPtr parse_term() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_number("0", peek().span);
    ValueExprPtr lhs = parse_value_factor();
    while (peek().is_op("*") || peek().is_op("/") || peek().is_op("%")) {
      BinaryOp op = peek().is_op("*") ? BinaryOp::Mul
                    : peek().is_op("/") ? BinaryOp::Div
                                        : BinaryOp::Mod;
      advance();
      ValueExprPtr rhs = parse_value_factor();
      SourceSpan span = SourceSpan::cover(lhs->span, rhs->span);
      lhs = make_binary(op, std::move(lhs), std::move(rhs), span);
    }
    return lhs;
  }

  ValueExprPtr parse_value_factor() {
    DepthGuard guard(*this);
    if (!guard.ok) return make_number("0", peek().span);
    const Token& t = peek();
    if (t.is_punct("(")) {
      advance();
      ValueExprPtr inner = parse_value();
      expect_punct(")", "to close the value expression");
      return inner;
    }
    switch (t.kind) {
      case TokenKind::Number:
        advance();
        return make_number(t.lexeme, t.span);
      case TokenKind::String:
        advance();
        return make_string(string_token_value(t), t.span);
      case TokenKind::DateLiteral: {
        advance();
        validate_date(t);
        return make_date(t.lexeme, t.span);
      }
      case TokenKind::Keyword:
        if (t.lexeme == "true" || t.lexeme == "false") {
          advance();
          return make_bool(t.lexeme == "true", t.span);
        }
        break;
      case TokenKind::Identifier:
        return parse_path();
      default:
        break;
    }
    error_here("expected a value");
    if (!is_boundary(t) && !t.is_punct(";") && !t.is_punct(")") && !t.is_punct(",")) advance();
    return make_number("0", t.span);
  }

  ValueExprPtr parse_path() {
    SourceSpan span = peek().span;
    std::vector<std::string> segments;
    segments.push_back(advance().lexeme);
    while (peek().is_punct(".") && peek(1).kind == TokenKind::Identifier) {
      advance();
      segments.push_back(advance().lexeme);
    }
    span = SourceSpan::cover(span, prev_span());
    return make_path(std::move(segments), span);
  }

  void validate_date(const Token& t) {
    int month = std::stoi(t.lexeme.substr(5, 2));
    int day = std::stoi(t.lexeme.substr(8, 2));
    if (month < 1 || month > 12 || day < 1 || day > 31) {
      diagnose(ErrorType::IncorrectSyntax, t.span, "invalid date literal");
    }
  }

  // --- helpers ------------------------------------------------------------

  SourceSpan prev_span() {
    size_t i = pos_;
    while (i > 0) {
      --i;
      if (lex_.tokens[i].kind != TokenKind::Comment) return lex_.tokens[i].span;
    }
    return {};
  }

  SourceSpan cover_all() {
    SourceSpan span;
    for (const auto& t : lex_.tokens) {
      if (t.kind == TokenKind::Eof || t.kind == TokenKind::Comment) continue;
      span = SourceSpan::cover(span, t.span);
    }
    return span;
  }

  // Lexer diagnostics are recorded before any section structure is known;
  // place each one in the section whose extent contains it.
  void rebucket_lexer_diagnostics() {
    size_t lexer_count = lex_.diagnostics.size();
    for (size_t i = 0; i < lexer_count && i < diagnostics_.size(); ++i) {
      for (const auto& [bucket, span] : extents_) {
        if (span.contains(diagnostics_[i].span)) {
          diagnostics_[i].section = bucket;
          break;
        }
      }
    }
  }

  ParseOptions options_;
  LexResult lex_;
  size_t pos_ = 0;
  ContractSpec spec_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<std::pair<Section, SourceSpan>> extents_;
  Section current_bucket_ = Section::ContractStructure;
  bool saw_section_ = false;
  int depth_ = 0;
  bool depth_reported_ = false;
};

}  // namespace

ParseResult parse(std::string_view source, const ParseOptions& options) {
  return Parser(source, options).run();
}

}  // namespace symboleo
