#include "symboleo/lexer.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace symboleo {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::DateLiteral: return "date";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Operator: return "operator";
    case TokenKind::Comment: return "comment";
    case TokenKind::Eof: return "eof";
  }
  return "";
}

bool is_keyword(std::string_view word) {
  static const std::array<std::string_view, 21> keywords = {
      "Domain",        "endDomain",     "Contract",      "Declarations",
      "Preconditions", "Postconditions", "Obligations",  "SurvivingObligations",
      "Powers",        "Constraints",   "isA",           "isAn",
      "with",          "Env",           "Obligation",    "Power",
      "not",           "and",           "or",            "true",
      "false",
  };
  for (auto k : keywords)
    if (k == word) return true;
  return false;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  LexResult run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      start_token();
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        lex_comment();
      } else if (c == '"') {
        lex_string();
      } else if (digit(c)) {
        lex_number_or_date();
      } else if (ident_start(c)) {
        lex_word();
      } else {
        lex_symbol();
      }
    }
    start_token();
    emit(TokenKind::Eof);
    return std::move(result_);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void start_token() {
    tok_begin_ = pos_;
    tok_line_ = line_;
    tok_col_ = col_;
  }

  void emit(TokenKind kind) {
    Token t;
    t.kind = kind;
    t.lexeme = std::string(src_.substr(tok_begin_, pos_ - tok_begin_));
    t.begin = tok_begin_;
    t.end = pos_;
    t.span.start_line = tok_line_;
    t.span.start_col = tok_col_;
    if (pos_ > tok_begin_) {
      // Tokens do not contain newlines, so the end stays on the start line.
      t.span.end_line = line_;
      t.span.end_col = col_ - 1;
    } else {
      t.span.end_line = tok_line_;
      t.span.end_col = tok_col_;
    }
    result_.tokens.push_back(std::move(t));
  }

  void diagnose(const std::string& message) {
    Diagnostic d;
    d.type = ErrorType::IncorrectSyntax;
    d.section = Section::ContractStructure;  // parser rebuckets by position
    d.span.start_line = tok_line_;
    d.span.start_col = tok_col_;
    d.span.end_line = line_;
    d.span.end_col = col_ > 1 ? col_ - 1 : col_;
    d.message = message;
    result_.diagnostics.push_back(std::move(d));
  }

  void lex_comment() {
    while (pos_ < src_.size() && src_[pos_] != '\n') advance();
    emit(TokenKind::Comment);
  }

  void lex_string() {
    advance();  // opening quote
    bool closed = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') break;
      if (c == '\\' && pos_ + 1 < src_.size()) {
        advance();
        advance();
        continue;
      }
      advance();
      if (c == '"') {
        closed = true;
        break;
      }
    }
    if (!closed) diagnose("unterminated string literal");
    emit(TokenKind::String);
  }

  // A date literal is yyyy-mm-dd; anything else starting with a digit is a
  // number (integer or decimal).
  void lex_number_or_date() {
    if (matches_date()) {
      for (int i = 0; i < 10; ++i) advance();
      emit(TokenKind::DateLiteral);
      return;
    }
    while (pos_ < src_.size() && digit(src_[pos_])) advance();
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && digit(src_[pos_ + 1])) {
      advance();
      while (pos_ < src_.size() && digit(src_[pos_])) advance();
    }
    emit(TokenKind::Number);
  }

  bool matches_date() const {
    if (pos_ + 10 > src_.size()) return false;
    static const char* pattern = "dddd-dd-dd";
    for (int i = 0; i < 10; ++i) {
      char c = src_[pos_ + i];
      if (pattern[i] == 'd' ? !digit(c) : c != '-') return false;
    }
    if (pos_ + 10 < src_.size() && (digit(src_[pos_ + 10]) || ident_char(src_[pos_ + 10])))
      return false;
    return true;
  }

  void lex_word() {
    while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
    std::string_view word = src_.substr(tok_begin_, pos_ - tok_begin_);
    emit(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier);
  }

  void lex_symbol() {
    char c = src_[pos_];
    char next = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
    auto two = [&](const char* text) {
      return c == text[0] && next == text[1];
    };
    if (two(":=") || two("->") || two("==") || two("!=") || two("<=") || two(">=")) {
      advance();
      advance();
      emit(TokenKind::Operator);
      return;
    }
    switch (c) {
      case '<': case '>': case '+': case '-': case '*': case '/': case '%':
        advance();
        emit(TokenKind::Operator);
        return;
      case '(': case ')': case ',': case ';': case ':': case '.':
        advance();
        emit(TokenKind::Punctuation);
        return;
      default: {
        advance();
        std::ostringstream msg;
        msg << "unexpected character '" << c << "'";
        diagnose(msg.str());
        return;  // nothing emitted; byte skipped
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::size_t tok_begin_ = 0;
  int tok_line_ = 1;
  int tok_col_ = 1;
  LexResult result_;
};

}  // namespace

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

std::string string_token_value(const Token& token) {
  const std::string& lex = token.lexeme;
  std::string out;
  size_t i = 0;
  size_t end = lex.size();
  if (!lex.empty() && lex.front() == '"') i = 1;
  if (end > i && lex.back() == '"') --end;
  for (; i < end; ++i) {
    char c = lex[i];
    if (c == '\\' && i + 1 < end) {
      char esc = lex[++i];
      switch (esc) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: out += esc; break;  // covers \" and backslash itself
      }
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace symboleo
