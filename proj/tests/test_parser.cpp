#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "symboleo/parser.hpp"
#include "util.hpp"

using namespace symboleo;

TEST_CASE("sales listing parses into the expected structure") {
  std::string src = testutil::read_file(testutil::repo_path("fixtures/specs/sales_listing.symboleo"));
  ParseResult r = parse(src);
  REQUIRE(r.spec.has_value());
  CHECK(r.diagnostics.empty());
  const ContractSpec& s = *r.spec;

  CHECK_FALSE(s.fragment);
  CHECK(s.domain.name == "MyDomain");
  REQUIRE(s.domain.concepts.size() == 2);

  const DomainConcept& seller = s.domain.concepts[0];
  CHECK(seller.name == "Seller");
  CHECK(seller.kind == ConceptKind::Role);
  REQUIRE(seller.attributes.size() == 1);  // "with" omitted in the source
  CHECK(seller.attributes[0].name == "name");
  CHECK(seller.attributes[0].type_name == "String");
  CHECK_FALSE(seller.attributes[0].is_env);

  const DomainConcept& deliv = s.domain.concepts[1];
  CHECK(deliv.name == "Deliv");
  CHECK(deliv.kind == ConceptKind::Event);
  REQUIRE(deliv.attributes.size() == 1);
  CHECK(deliv.attributes[0].name == "qty");
  CHECK(deliv.attributes[0].is_env);

  CHECK(s.name == "MyContract");
  REQUIRE(s.signature.size() == 2);
  CHECK(s.signature[0].name == "s");
  CHECK(s.signature[0].type_name == "Seller");
  CHECK(s.signature[1].name == "name");
  CHECK(s.signature[1].type_name == "String");
  CHECK(s.signature[0].initializer == nullptr);

  REQUIRE(s.declarations.size() == 1);
  const Declaration& b = s.declarations[0];
  CHECK(b.name == "b");
  CHECK(b.type_name == "Buyer");
  CHECK(b.home == SourceSection::Declarations);
  REQUIRE(b.initializers.size() == 1);
  CHECK(b.initializers[0].attribute == "buyername");
  REQUIRE(b.initializers[0].value != nullptr);
  CHECK(b.initializers[0].value->kind == ValueExpr::Kind::Path);
  CHECK(b.initializers[0].value->path_text() == "name");

  REQUIRE(s.obligations.size() == 1);
  const Norm& delivery = s.obligations[0];
  CHECK(delivery.name == "delivery");
  CHECK(delivery.kind == NormKind::Obligation);
  CHECK(delivery.trigger == nullptr);
  CHECK(delivery.first_party->path_text() == "seller");
  CHECK(delivery.second_party->path_text() == "buyer");
  CHECK(delivery.antecedent->kind == SituationExpr::Kind::True);
  REQUIRE(delivery.consequent->kind == SituationExpr::Kind::Predicate);
  CHECK(delivery.consequent->predicate == "WhappensBefore");
  REQUIRE(delivery.consequent->args.size() == 2);

  REQUIRE(s.powers.size() == 1);
  const Norm& susp = s.powers[0];
  CHECK(susp.name == "suspendDelivery");
  CHECK(susp.kind == NormKind::Power);
  REQUIRE(susp.trigger != nullptr);
  REQUIRE(susp.trigger->kind == SituationExpr::Kind::Predicate);
  CHECK(susp.trigger->predicate == "Happens");
  REQUIRE(susp.trigger->args.size() == 1);
  // Violated(...) nests as a situation argument inside Happens
  REQUIRE(std::holds_alternative<SituationExprPtr>(susp.trigger->args[0]));
  const SituationExpr& violated = *std::get<SituationExprPtr>(susp.trigger->args[0]);
  CHECK(violated.predicate == "Violated");
  REQUIRE(susp.consequent->kind == SituationExpr::Kind::Predicate);
  CHECK(susp.consequent->predicate == "Suspended");

  REQUIRE(s.constraints.size() == 1);
  CHECK(s.constraints[0]->kind == SituationExpr::Kind::Not);
  CHECK(s.constraints[0]->children.front()->predicate == "IsEqual");

  CHECK(s.surviving_obligations.empty());
  CHECK(s.preconditions.empty());
  CHECK(s.postconditions.empty());
}

TEST_CASE("fragment detection follows the first significant token") {
  std::string frag = "Obligations\n  o1: Obligation(a, b, true, Happens(x));\n";

  ParseResult autod = parse(frag);
  REQUIRE(autod.spec.has_value());
  CHECK(autod.spec->fragment);
  CHECK(autod.diagnostics.empty());
  CHECK(autod.spec->name.empty());
  REQUIRE(autod.spec->obligations.size() == 1);

  ParseResult full = parse(frag, {.mode = ParseMode::Full});
  REQUIRE(full.spec.has_value());
  CHECK_FALSE(full.spec->fragment);

  // a comment before the section keyword does not defeat detection
  ParseResult commented = parse("// note\nObligations\n  o1: Obligation(a, b, true, true);\n");
  REQUIRE(commented.spec.has_value());
  CHECK(commented.spec->fragment);

  ParseResult doc = parse("Contract C ()\nObligations\n  o1: Obligation(a, b, true, true);\n");
  REQUIRE(doc.spec.has_value());
  CHECK_FALSE(doc.spec->fragment);

  // forcing fragment mode on a full document reports the alien keywords
  ParseResult forced = parse(testutil::read_file(testutil::repo_path(
                                 "fixtures/specs/sales_listing.symboleo")),
                             {.mode = ParseMode::Fragment});
  CHECK_FALSE(forced.diagnostics.empty());
}

TEST_CASE("parser recovers at statement boundaries") {
  ParseResult r = parse(
      "Declarations\n"
      "  broken 5;\n"
      "  y: Number;\n"
      "Constraints\n"
      "  x == ;\n"
      "  y >= 2;\n");
  REQUIRE(r.spec.has_value());
  CHECK_FALSE(r.diagnostics.empty());

  // the good statements around the broken ones survive
  REQUIRE(r.spec->declarations.size() == 1);
  CHECK(r.spec->declarations[0].name == "y");
  REQUIRE_FALSE(r.spec->constraints.empty());
  CHECK(r.spec->constraints.back()->kind == SituationExpr::Kind::Comparison);

  for (const auto& d : r.diagnostics) {
    CHECK(d.type == ErrorType::IncorrectSyntax);
    CHECK(d.span.known());
  }
}

TEST_CASE("date literals are range checked") {
  ParseResult bad = parse("Declarations\n  d: Date := 2024-13-40;\n");
  REQUIRE(bad.spec.has_value());
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].type == ErrorType::IncorrectSyntax);
  CHECK(bad.diagnostics[0].message == "invalid date literal");
  // the value is still recorded verbatim
  REQUIRE(bad.spec->declarations.size() == 1);
  CHECK(bad.spec->declarations[0].initializers[0].value->literal == "2024-13-40");

  ParseResult good = parse("Declarations\n  d: Date := 2024-12-31;\n");
  CHECK(good.diagnostics.empty());
}

TEST_CASE("expression nesting is depth guarded") {
  std::string deep = "Preconditions\n  ";
  for (int i = 0; i < 100; ++i) deep += "not(";
  deep += "true";
  for (int i = 0; i < 100; ++i) deep += ")";
  deep += ";\n";

  ParseResult guarded = parse(deep);  // default depth 64
  REQUIRE(guarded.spec.has_value());
  CHECK_FALSE(guarded.diagnostics.empty());

  ParseResult relaxed = parse(deep, {.mode = ParseMode::Auto, .max_nesting_depth = 512});
  REQUIRE(relaxed.spec.has_value());
  CHECK(relaxed.diagnostics.empty());
  int depth = 0;
  const SituationExpr* e = relaxed.spec->preconditions.at(0).get();
  while (e->kind == SituationExpr::Kind::Not) {
    ++depth;
    e = e->children.front().get();
  }
  CHECK(depth == 100);
  CHECK(e->kind == SituationExpr::Kind::True);
}

TEST_CASE("short norm spellings normalize to the long keywords") {
  ParseResult r = parse(
      "Obligations\n"
      "  o1: O(a, b, true, Happens(x));\n"
      "Powers\n"
      "  p1: Happens(e) -> P(b, a, true, Terminated(contract));\n");
  REQUIRE(r.spec.has_value());
  CHECK(r.diagnostics.empty());
  REQUIRE(r.spec->obligations.size() == 1);
  CHECK(r.spec->obligations[0].kind == NormKind::Obligation);
  REQUIRE(r.spec->powers.size() == 1);
  CHECK(r.spec->powers[0].kind == NormKind::Power);
  REQUIRE(r.spec->powers[0].trigger != nullptr);
}

TEST_CASE("surviving obligations are kept apart from plain ones") {
  ParseResult r = parse(
      "Obligations\n"
      "  o1: Obligation(a, b, true, Happens(x));\n"
      "SurvivingObligations\n"
      "  s1: Obligation(a, b, true, Happens(y));\n");
  REQUIRE(r.spec.has_value());
  CHECK(r.spec->obligations.size() == 1);
  REQUIRE(r.spec->surviving_obligations.size() == 1);
  CHECK(r.spec->surviving_obligations[0].home == SourceSection::SurvivingObligations);
}

TEST_CASE("degenerate inputs produce diagnostics, never crashes") {
  ParseResult empty = parse("");
  CHECK_FALSE(empty.spec.has_value());
  REQUIRE(empty.diagnostics.size() == 1);
  CHECK(empty.diagnostics[0].message == "no Symboleo content found");

  ParseResult blank = parse("  \n\t\n");
  CHECK_FALSE(blank.spec.has_value());

  ParseResult noise = parse("@@ ##");
  CHECK_FALSE(noise.spec.has_value());
  CHECK(noise.diagnostics.size() == 4);  // one per skipped byte

  ParseResult half = parse("Contract");
  REQUIRE(half.spec.has_value());  // the header was seen, name placeholder
  CHECK_FALSE(half.diagnostics.empty());
}

TEST_CASE("comments are transparent to the grammar") {
  ParseResult with_comments = parse(
      "Domain d // the domain\n"
      "  E isAn Event; // no attributes\n"
      "endDomain\n"
      "// a standalone note\n"
      "Contract C ()\n"
      "Constraints\n"
      "  a == b; // trailing\n");
  REQUIRE(with_comments.spec.has_value());
  CHECK(with_comments.diagnostics.empty());
  CHECK(with_comments.spec->domain.concepts.size() == 1);
  CHECK(with_comments.spec->constraints.size() == 1);
}

TEST_CASE("trailing input after the sections is reported and skipped") {
  ParseResult r = parse(
      "Contract C ()\n"
      "Constraints\n"
      "  a == b;\n"
      "endDomain\n"
      "Constraints\n"
      "  c == d;\n");
  REQUIRE(r.spec.has_value());
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].message == "unexpected trailing input (found 'endDomain')");
  // the section after the stray marker is still collected
  CHECK(r.spec->constraints.size() == 2);
}

TEST_CASE("parameter initializers are tolerated in the signature") {
  ParseResult r = parse("Contract C (due: Date := 2025-01-01, qty: Number)\n");
  REQUIRE(r.spec.has_value());
  CHECK(r.diagnostics.empty());  // lint complains, the parser does not
  REQUIRE(r.spec->signature.size() == 2);
  REQUIRE(r.spec->signature[0].initializer != nullptr);
  CHECK(r.spec->signature[0].initializer->kind == ValueExpr::Kind::Date);
  CHECK(r.spec->signature[1].initializer == nullptr);
}

TEST_CASE("misplaced statements keep their syntactic home") {
  ParseResult r = parse(
      "Obligations\n"
      "  looksLikeDecl: Number;\n"
      "  o1: Obligation(a, b, true, true);\n"
      "Declarations\n"
      "  strayNorm: Power(a, b, true, Terminated(contract));\n");
  REQUIRE(r.spec.has_value());
  CHECK(r.diagnostics.empty());  // structural lint, not a parse error

  REQUIRE(r.spec->declarations.size() == 1);
  CHECK(r.spec->declarations[0].name == "looksLikeDecl");
  CHECK(r.spec->declarations[0].home == SourceSection::Obligations);

  REQUIRE(r.spec->powers.size() == 1);
  CHECK(r.spec->powers[0].name == "strayNorm");
  CHECK(r.spec->powers[0].home == SourceSection::Declarations);
}
