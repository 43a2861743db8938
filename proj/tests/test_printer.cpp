#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "gen.hpp"
#include "symboleo/parser.hpp"
#include "symboleo/printer.hpp"
#include "util.hpp"

using namespace symboleo;

namespace {

SituationExprPtr pred(const char* name, std::vector<std::string> path) {
  std::vector<SituationExpr::PredicateArg> args;
  args.emplace_back(make_path(std::move(path)));
  return make_predicate(name, std::move(args));
}

ParseResult reparse(const ContractSpec& spec) {
  ParseOptions opts;
  opts.mode = spec.fragment ? ParseMode::Fragment : ParseMode::Full;
  return parse(format(spec), opts);
}

}  // namespace

TEST_CASE("the sales listing formats to its canonical shape") {
  std::string src = testutil::read_file(testutil::repo_path("fixtures/specs/sales_listing.symboleo"));
  ParseResult r = parse(src);
  REQUIRE(r.spec.has_value());

  const std::string expected =
      "Domain MyDomain\n"
      "  Seller isA Role with name: String;\n"
      "  Deliv isAn Event with Env qty: Number;\n"
      "endDomain\n"
      "Contract MyContract (s: Seller, name: String)\n"
      "  Declarations\n"
      "    b: Buyer with buyername := name;\n"
      "  Obligations\n"
      "    delivery: Obligation(seller, buyer, true, WhappensBefore(deliv, dueDate));\n"
      "  Powers\n"
      "    suspendDelivery: Happens(Violated(obligations.payment)) -> Power(s, b, true, "
      "Suspended(obligations.delivery));\n"
      "  Constraints\n"
      "    not(IsEqual(s, b));\n";
  CHECK(format(*r.spec) == expected);
}

TEST_CASE("short norm spellings format to the long keywords") {
  ParseResult r = parse(
      "Obligations\n"
      "  o1: O(a, b, true, Happens(x));\n");
  REQUIRE(r.spec.has_value());
  CHECK(format(*r.spec) ==
        "Obligations\n"
        "  o1: Obligation(a, b, true, Happens(x));\n");
}

TEST_CASE("connective children are parenthesised only to preserve shape") {
  std::vector<SituationExprPtr> ab;
  ab.push_back(pred("Happens", {"a"}));
  ab.push_back(pred("Happens", {"b"}));

  SUBCASE("and below or prints bare") {
    std::vector<SituationExprPtr> top;
    top.push_back(make_and(std::move(ab)));
    top.push_back(pred("Happens", {"c"}));
    CHECK(format(*make_or(std::move(top))) ==
          "Happens(a) and Happens(b) or Happens(c)");
  }
  SUBCASE("or below and needs parentheses") {
    std::vector<SituationExprPtr> top;
    top.push_back(make_or(std::move(ab)));
    top.push_back(pred("Happens", {"c"}));
    CHECK(format(*make_and(std::move(top))) ==
          "(Happens(a) or Happens(b)) and Happens(c)");
  }
  SUBCASE("and below and needs parentheses") {
    std::vector<SituationExprPtr> top;
    top.push_back(make_and(std::move(ab)));
    top.push_back(pred("Happens", {"c"}));
    CHECK(format(*make_and(std::move(top))) ==
          "(Happens(a) and Happens(b)) and Happens(c)");
  }
  SUBCASE("not always brackets its child") {
    CHECK(format(*make_not(make_true())) == "not(true)");
  }
}

TEST_CASE("value printing follows arithmetic precedence") {
  auto a = [] { return make_path({"a"}); };
  auto b = [] { return make_path({"b"}); };
  auto c = [] { return make_path({"c"}); };

  CHECK(format(*make_binary(BinaryOp::Add, a(), make_binary(BinaryOp::Mul, b(), c(), {}), {})) ==
        "a + b * c");
  CHECK(format(*make_binary(BinaryOp::Mul, make_binary(BinaryOp::Add, a(), b(), {}), c(), {})) ==
        "(a + b) * c");
  CHECK(format(*make_binary(BinaryOp::Add, make_binary(BinaryOp::Add, a(), b(), {}), c(), {})) ==
        "a + b + c");
  CHECK(format(*make_binary(BinaryOp::Sub, a(), make_binary(BinaryOp::Sub, b(), c(), {}), {})) ==
        "a - (b - c)");
  CHECK(format(*make_binary(BinaryOp::Mod, a(), b(), {})) == "a % b");

  CHECK(format(*make_number("3.14")) == "3.14");
  CHECK(format(*make_date("2024-01-15")) == "2024-01-15");
  CHECK(format(*make_bool(false)) == "false");
  CHECK(format(*make_path({"obligations", "oPay"})) == "obligations.oPay");
}

TEST_CASE("string literals are escaped on output") {
  CHECK(format(*make_string("plain")) == "\"plain\"");
  CHECK(format(*make_string("say \"hi\"")) == "\"say \\\"hi\\\"\"");
  CHECK(format(*make_string("back\\slash")) == "\"back\\\\slash\"");
  CHECK(format(*make_string("line\nbreak")) == "\"line\\nbreak\"");
  CHECK(format(*make_string("tab\tstop")) == "\"tab\\tstop\"");
}

TEST_CASE("formatting is idempotent on the shipped specifications") {
  for (const char* rel : {
           "fixtures/specs/sales_listing.symboleo",
           "fixtures/specs/sales_listing_clean.symboleo",
           "assets/scenarios/A/spec.symboleo",
           "assets/scenarios/B/spec.symboleo",
           "assets/scenarios/C/spec.symboleo",
           "fixtures/snippets/env_usage_incorrect.symboleo",
           "fixtures/snippets/declarations_incorrect.symboleo",
       }) {
    CAPTURE(rel);
    ParseResult first = parse(testutil::read_file(testutil::repo_path(rel)));
    REQUIRE(first.spec.has_value());
    std::string once = format(*first.spec);

    ParseOptions opts;
    opts.mode = first.spec->fragment ? ParseMode::Fragment : ParseMode::Full;
    ParseResult second = parse(once, opts);
    REQUIRE(second.spec.has_value());
    CHECK(second.diagnostics.empty());
    CHECK(format(*second.spec) == once);
    CHECK(structurally_equal(*first.spec, *second.spec));
  }
}

TEST_CASE("generated specifications survive a parse round trip") {
  int fragments = 0;
  for (unsigned seed = 1; seed <= 200; ++seed) {
    CAPTURE(seed);
    testgen::Gen gen(seed);
    ContractSpec spec = gen.spec();
    if (spec.fragment) ++fragments;

    ParseResult r = reparse(spec);
    REQUIRE(r.spec.has_value());
    CHECK(r.diagnostics.empty());
    CHECK(structurally_equal(spec, *r.spec));

    // and formatting the reparsed tree changes nothing
    CHECK(format(*r.spec) == format(spec));
  }
  CHECK(fragments > 5);  // the corpus exercises both document modes
}

TEST_CASE("clone produces structurally equal copies") {
  testgen::Gen gen(7);
  ContractSpec spec = gen.spec();
  for (const auto& pre : spec.preconditions) {
    CHECK(structurally_equal(*pre, *clone(*pre)));
  }
  for (const auto& n : spec.obligations) {
    CHECK(structurally_equal(*n.consequent, *clone(*n.consequent)));
    CHECK(structurally_equal(*n.first_party, *clone(*n.first_party)));
  }
}
