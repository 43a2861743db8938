#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "symboleo/lexer.hpp"

using namespace symboleo;

namespace {

std::vector<std::string> lexemes(const LexResult& r) {
  std::vector<std::string> out;
  for (const auto& t : r.tokens) out.push_back(t.lexeme);
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

}  // namespace

TEST_CASE("declaration statement tokenizes into the expected kinds") {
  LexResult r = tokenize("b: Buyer with buyername:=name;");
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.tokens.size() == 9);  // 8 tokens + eof

  const std::vector<std::pair<TokenKind, std::string>> expected = {
      {TokenKind::Identifier, "b"},        {TokenKind::Punctuation, ":"},
      {TokenKind::Identifier, "Buyer"},    {TokenKind::Keyword, "with"},
      {TokenKind::Identifier, "buyername"}, {TokenKind::Operator, ":="},
      {TokenKind::Identifier, "name"},     {TokenKind::Punctuation, ";"},
      {TokenKind::Eof, ""},
  };
  for (size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(r.tokens[i].kind == expected[i].first);
    CHECK(r.tokens[i].lexeme == expected[i].second);
  }
}

TEST_CASE("empty input yields a lone eof token") {
  LexResult r = tokenize("");
  REQUIRE(r.tokens.size() == 1);
  CHECK(r.tokens[0].kind == TokenKind::Eof);
  CHECK(r.tokens[0].begin == 0);
  CHECK(r.tokens[0].end == 0);
  CHECK(r.diagnostics.empty());

  LexResult ws = tokenize("  \n\t \r\n");
  REQUIRE(ws.tokens.size() == 1);
  CHECK(ws.tokens[0].kind == TokenKind::Eof);
}

TEST_CASE("keyword recognition is exact and case sensitive") {
  for (const char* kw :
       {"Domain", "endDomain", "Contract", "Declarations", "Preconditions", "Postconditions",
        "Obligations", "SurvivingObligations", "Powers", "Constraints", "isA", "isAn", "with",
        "Env", "Obligation", "Power", "not", "and", "or", "true", "false"}) {
    CAPTURE(kw);
    CHECK(is_keyword(kw));
  }
  CHECK_FALSE(is_keyword("domain"));
  CHECK_FALSE(is_keyword("contract"));
  CHECK_FALSE(is_keyword("isa"));
  CHECK_FALSE(is_keyword("TRUE"));
  CHECK_FALSE(is_keyword(""));

  LexResult r = tokenize("Domain domain");
  CHECK(r.tokens[0].kind == TokenKind::Keyword);
  CHECK(r.tokens[1].kind == TokenKind::Identifier);
}

TEST_CASE("spans are one-based and inclusive") {
  LexResult r = tokenize("ab cd\n  efg");
  REQUIRE(r.tokens.size() == 4);

  CHECK(r.tokens[0].span == SourceSpan{1, 1, 1, 2});
  CHECK(r.tokens[1].span == SourceSpan{1, 4, 1, 5});
  CHECK(r.tokens[2].span == SourceSpan{2, 3, 2, 5});
  // eof sits just past the last character
  CHECK(r.tokens[3].span.start_line == 2);
  CHECK(r.tokens[3].span.start_col == 6);

  CHECK(r.tokens[2].begin == 8);
  CHECK(r.tokens[2].end == 11);
}

TEST_CASE("string literals keep quotes in the lexeme and unescape on demand") {
  LexResult r = tokenize("\"say \\\"hi\\\"\\n\"");
  REQUIRE(r.diagnostics.empty());
  REQUIRE(r.tokens.size() == 2);
  CHECK(r.tokens[0].kind == TokenKind::String);
  CHECK(r.tokens[0].lexeme == "\"say \\\"hi\\\"\\n\"");
  CHECK(string_token_value(r.tokens[0]) == "say \"hi\"\n");

  LexResult tab = tokenize("\"a\\tb\\\\c\"");
  CHECK(string_token_value(tab.tokens[0]) == "a\tb\\c");
}

TEST_CASE("unterminated string is reported and lexing continues") {
  LexResult r = tokenize("\"open\nnext");
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].type == ErrorType::IncorrectSyntax);
  CHECK(r.diagnostics[0].message == "unterminated string literal");
  // the broken string plus the following identifier are both present
  REQUIRE(r.tokens.size() == 3);
  CHECK(r.tokens[0].kind == TokenKind::String);
  CHECK(r.tokens[1].lexeme == "next");
}

TEST_CASE("dates lex by shape; numbers cover integers and decimals") {
  LexResult r = tokenize("2024-01-15 500000 3.14 7");
  REQUIRE(r.tokens.size() == 5);
  CHECK(r.tokens[0].kind == TokenKind::DateLiteral);
  CHECK(r.tokens[0].lexeme == "2024-01-15");
  CHECK(r.tokens[1].kind == TokenKind::Number);
  CHECK(r.tokens[2].kind == TokenKind::Number);
  CHECK(r.tokens[2].lexeme == "3.14");
  CHECK(r.tokens[3].kind == TokenKind::Number);

  // shape only: range checking is the parser's job
  LexResult odd = tokenize("2024-13-99");
  CHECK(odd.tokens[0].kind == TokenKind::DateLiteral);

  // a trailing identifier character defeats the date shape
  LexResult glued = tokenize("2024-01-15x");
  CHECK(glued.tokens[0].kind == TokenKind::Number);
  CHECK(glued.tokens[0].lexeme == "2024");
}

TEST_CASE("multi-character operators bind before single ones") {
  LexResult r = tokenize(":= -> == != <= >= < > + - * / % : .");
  std::vector<std::string> ops;
  std::vector<std::string> punct;
  for (const auto& t : r.tokens) {
    if (t.kind == TokenKind::Operator) ops.push_back(t.lexeme);
    if (t.kind == TokenKind::Punctuation) punct.push_back(t.lexeme);
  }
  CHECK(ops == std::vector<std::string>{":=", "->", "==", "!=", "<=", ">=", "<", ">", "+", "-",
                                        "*", "/", "%"});
  CHECK(punct == std::vector<std::string>{":", "."});
}

TEST_CASE("line comments stay in the token stream") {
  LexResult r = tokenize("a // trailing words\nb");
  REQUIRE(r.tokens.size() == 4);
  CHECK(r.tokens[0].lexeme == "a");
  CHECK(r.tokens[1].kind == TokenKind::Comment);
  CHECK(r.tokens[1].lexeme == "// trailing words");
  CHECK(r.tokens[2].lexeme == "b");
}

TEST_CASE("unknown bytes are skipped with a diagnostic") {
  LexResult r = tokenize("a @ b # c");
  REQUIRE(r.diagnostics.size() == 2);
  CHECK(r.diagnostics[0].type == ErrorType::IncorrectSyntax);
  CHECK(r.diagnostics[0].message == "unexpected character '@'");
  CHECK(r.diagnostics[1].message == "unexpected character '#'");
  CHECK(lexemes(r) == std::vector<std::string>{"a", "b", "c", ""});
}

TEST_CASE("token offsets reconstruct the source") {
  std::string src =
      "Domain d\n"
      "  Deliv isAn Event with Env qty: Number;\n"
      "endDomain\n"
      "// note\n"
      "Contract C(x: Date := 2024-01-15)\n"
      "  Constraints\n"
      "    not(IsEqual(a, b)) and x >= 3.5;\n";
  LexResult r = tokenize(src);
  REQUIRE(r.diagnostics.empty());

  std::size_t cursor = 0;
  for (const auto& t : r.tokens) {
    CHECK(t.lexeme == src.substr(t.begin, t.end - t.begin));
    CHECK(t.begin >= cursor);
    // gaps between tokens are pure whitespace when nothing was diagnosed
    for (std::size_t i = cursor; i < t.begin; ++i) {
      CAPTURE(i);
      CHECK(is_space(src[i]));
    }
    cursor = t.end;
  }
  CHECK(cursor == src.size());
  CHECK(r.tokens.back().kind == TokenKind::Eof);
}
