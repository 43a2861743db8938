#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symboleo/taxonomy.hpp"

namespace symboleo {

enum class TokenKind {
  Keyword,
  Identifier,
  Number,
  String,
  DateLiteral,
  Punctuation,  // ( ) , ; : .
  Operator,     // := -> == != <= >= < > + - * / %
  Comment,      // // to end of line, kept in the stream
  Eof,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string lexeme;  // verbatim source slice (String keeps its quotes)
  SourceSpan span;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;

  bool is(TokenKind k, std::string_view text) const { return kind == k && lexeme == text; }
  bool is_keyword(std::string_view text) const { return is(TokenKind::Keyword, text); }
  bool is_punct(std::string_view text) const { return is(TokenKind::Punctuation, text); }
  bool is_op(std::string_view text) const { return is(TokenKind::Operator, text); }
};

struct LexResult {
  std::vector<Token> tokens;  // always ends with one Eof token
  std::vector<Diagnostic> diagnostics;
};

// Splits source into tokens. Never throws: unknown bytes produce an
// Incorrect Syntax diagnostic and are skipped, so the token list plus the
// skipped bytes always reconstructs the input.
LexResult tokenize(std::string_view source);

bool is_keyword(std::string_view word);

// Unescapes the body of a String token ("..." with \" \\ \n \t).
std::string string_token_value(const Token& token);

}  // namespace symboleo
