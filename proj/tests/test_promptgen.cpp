#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "symboleo/promptgen.hpp"
#include "util.hpp"

using namespace symboleo;

namespace {

PromptAssets shipped_assets() { return load_prompt_assets(testutil::repo_path("assets")); }

bool starts_with(const std::string& text, const std::string& prefix) {
  return text.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

TEST_CASE("the built-in matrix enumerates all 38 configurations") {
  auto matrix = paper_matrix();
  REQUIRE(matrix.size() == 38);

  // case ids are positional and one-based
  for (int i = 0; i < 38; ++i) {
    REQUIRE(matrix[i].case_id.has_value());
    CHECK(*matrix[i].case_id == i + 1);
  }

  // the two no-grammar baselines
  CHECK_FALSE(matrix[0].include_grammar);
  CHECK_FALSE(matrix[0].include_theory);
  CHECK_FALSE(matrix[0].include_emotional);
  CHECK(matrix[0].examples.empty());
  CHECK_FALSE(matrix[1].include_grammar);
  CHECK(matrix[1].examples == std::vector<Scenario>{Scenario::A, Scenario::B, Scenario::C});

  // everything else includes the grammar, in four blocks of nine
  const char* expected_labels[9] = {"No.", "A", "AB", "ABC", "AC", "BC", "BA", "CA", "CB"};
  struct Block {
    int first_case;
    bool theory;
    bool emotional;
    const char* group;
  };
  const Block blocks[4] = {
      {3, false, false, "Grammar"},
      {12, false, true, "Grammar + emotional prompt"},
      {21, true, false, "Grammar + theory"},
      {30, true, true, "Grammar + theory + emotional prompt"},
  };
  for (const Block& block : blocks) {
    for (int k = 0; k < 9; ++k) {
      const PromptConfig& c = matrix[static_cast<size_t>(block.first_case - 1 + k)];
      CAPTURE(block.first_case);
      CAPTURE(k);
      CHECK(c.include_grammar);
      CHECK(c.include_theory == block.theory);
      CHECK(c.include_emotional == block.emotional);
      CHECK(scenario_label(c) == expected_labels[k]);
      CHECK(group_label(c) == block.group);
    }
  }
  CHECK(group_label(matrix[0]) == "No grammar");
  CHECK(group_label(matrix[1]) == "No grammar");

  // no two configurations coincide
  std::set<std::string> fingerprints;
  for (const auto& c : matrix) {
    fingerprints.insert(std::string(c.include_grammar ? "G" : "-") +
                        (c.include_theory ? "T" : "-") + (c.include_emotional ? "E" : "-") + ":" +
                        scenario_label(c));
  }
  CHECK(fingerprints.size() == 38);
}

TEST_CASE("scenario letters map both ways") {
  CHECK(scenario_letter(Scenario::A) == 'A');
  CHECK(scenario_letter(Scenario::C) == 'C');
  CHECK(scenario_from_letter('b') == Scenario::B);
  CHECK(scenario_from_letter('A') == Scenario::A);
  CHECK_FALSE(scenario_from_letter('D').has_value());
}

TEST_CASE("asset loading strips trailing newlines and finds all scenarios") {
  PromptAssets assets = shipped_assets();
  CHECK_FALSE(assets.base_statement.empty());
  CHECK_FALSE(assets.grammar_text.empty());
  CHECK_FALSE(assets.theory_text.empty());
  CHECK_FALSE(assets.emotional_text.empty());
  CHECK_FALSE(assets.final_query.empty());
  CHECK(assets.scenarios.size() == 3);

  for (const auto& [s, sa] : assets.scenarios) {
    CAPTURE(scenario_letter(s));
    CHECK_FALSE(sa.contract_text.empty());
    CHECK_FALSE(sa.spec_text.empty());
    CHECK(sa.spec_text.back() != '\n');
    CHECK(sa.contract_text.back() != '\n');
  }

  CHECK_THROWS_AS(load_prompt_assets(testutil::repo_path("no-such-assets")), PromptError);
}

TEST_CASE("assembly is deterministic and keeps the fixed block order") {
  PromptAssets assets = shipped_assets();
  auto matrix = paper_matrix();

  for (const auto& config : matrix) {
    CAPTURE(*config.case_id);
    std::string once = assemble(config, assets);
    CHECK(once == assemble(config, assets));
    CHECK(starts_with(once, assets.base_statement));
    CHECK(ends_with(once, assets.final_query));
  }

  // bare baseline: exactly the base statement and the query
  CHECK(assemble(matrix[0], assets) == assets.base_statement + "\n\n" + assets.final_query);

  // case 2 carries the three examples in order but no grammar, no theory
  std::string case2 = assemble(matrix[1], assets);
  CHECK(case2.find("First example") != std::string::npos);
  CHECK(case2.find("Second example") != std::string::npos);
  CHECK(case2.find("Third example") != std::string::npos);
  CHECK(case2.find("Xtext") == std::string::npos);
  CHECK(case2.find(assets.theory_text) == std::string::npos);
  size_t a_pos = case2.find(assets.scenarios.at(Scenario::A).spec_text);
  size_t b_pos = case2.find(assets.scenarios.at(Scenario::B).spec_text);
  size_t c_pos = case2.find(assets.scenarios.at(Scenario::C).spec_text);
  REQUIRE(a_pos != std::string::npos);
  REQUIRE(b_pos != std::string::npos);
  REQUIRE(c_pos != std::string::npos);
  CHECK(a_pos < b_pos);
  CHECK(b_pos < c_pos);

  // case 33 (grammar + theory + emotional, examples ABC) has every block,
  // with the emotional appeal after the examples and before the query
  std::string case33 = assemble(matrix[32], assets);
  CHECK(scenario_label(matrix[32]) == "ABC");
  size_t grammar_pos = case33.find("Here is Symboleo's syntax in Xtext format:");
  size_t theory_pos = case33.find(assets.theory_text);
  size_t example_pos = case33.find("First example");
  size_t emotional_pos = case33.find(assets.emotional_text);
  size_t query_pos = case33.find(assets.final_query);
  REQUIRE(grammar_pos != std::string::npos);
  REQUIRE(theory_pos != std::string::npos);
  REQUIRE(example_pos != std::string::npos);
  REQUIRE(emotional_pos != std::string::npos);
  REQUIRE(query_pos != std::string::npos);
  CHECK(grammar_pos < theory_pos);
  CHECK(theory_pos < example_pos);
  CHECK(example_pos < emotional_pos);
  CHECK(emotional_pos < query_pos);

  // reversed example order flips the embedded specifications
  std::string case36 = assemble(matrix[35], assets);  // BA
  CHECK(scenario_label(matrix[35]) == "BA");
  CHECK(case36.find(assets.scenarios.at(Scenario::B).spec_text) <
        case36.find(assets.scenarios.at(Scenario::A).spec_text));

  // each example pairs its contract with its specification via the bridge
  std::string case4 = assemble(matrix[3], assets);  // grammar + A
  size_t contract_pos = case4.find(assets.scenarios.at(Scenario::A).contract_text);
  size_t bridge_pos = case4.find("The corresponding Symboleo specification is:");
  size_t spec_pos = case4.find(assets.scenarios.at(Scenario::A).spec_text);
  REQUIRE(contract_pos != std::string::npos);
  CHECK(contract_pos < bridge_pos);
  CHECK(bridge_pos < spec_pos);
}

TEST_CASE("assembly rejects duplicate or unavailable examples") {
  PromptAssets assets = shipped_assets();
  PromptConfig dup;
  dup.examples = {Scenario::A, Scenario::A};
  CHECK_THROWS_AS(assemble(dup, assets), PromptError);
  CHECK_THROWS_WITH(assemble(dup, assets), "example scenario A requested twice");

  PromptAssets partial = assets;
  partial.scenarios.erase(Scenario::B);
  PromptConfig wants_b;
  wants_b.examples = {Scenario::A, Scenario::B};
  CHECK_THROWS_AS(assemble(wants_b, partial), PromptError);
  CHECK_THROWS_WITH(assemble(wants_b, partial), "no assets for example scenario B");
}

TEST_CASE("chunking packs blank-line blocks without cutting them") {
  CHECK_THROWS_AS(split_for_limit("anything", 100), PromptError);
  CHECK_THROWS_AS(split_for_limit("anything", kMinChunkChars - 1), PromptError);

  // blocks shorter than the limit are packed greedily
  std::string a(400, 'a');
  std::string b(400, 'b');
  std::string c(400, 'c');
  std::string prompt = a + "\n\n" + b + "\n\n" + c;
  auto chunks = split_for_limit(prompt, 1024);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].text == a + "\n\n" + b);  // 802 chars; c would overflow
  CHECK(chunks[1].text == c);
  CHECK_FALSE(chunks[0].oversize);
  CHECK_FALSE(chunks[1].oversize);

  // a block longer than the limit becomes its own flagged chunk
  std::string big(3000, 'x');
  auto flagged = split_for_limit(a + "\n\n" + big + "\n\n" + b, 1024);
  REQUIRE(flagged.size() == 3);
  CHECK(flagged[0].text == a);
  CHECK(flagged[1].oversize);
  CHECK(flagged[1].text == big);
  CHECK(flagged[2].text == b);

  // rejoining the chunks reproduces the prompt
  for (const auto& input : {prompt, a + "\n\n" + big + "\n\n" + b}) {
    std::string joined;
    for (const auto& ch : split_for_limit(input, 1024)) {
      if (!joined.empty()) joined += "\n\n";
      joined += ch.text;
    }
    CHECK(joined == input);
  }

  // everything fits: one chunk, text preserved byte for byte
  auto single = split_for_limit(prompt, 100000);
  REQUIRE(single.size() == 1);
  CHECK(single[0].text == prompt);

  auto empty = split_for_limit("", 2048);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].text.empty());

  // real prompts split cleanly at the shipped asset boundaries
  PromptAssets assets = shipped_assets();
  auto matrix = paper_matrix();
  std::string case33 = assemble(matrix[32], assets);
  auto parts = split_for_limit(case33, 4096);
  CHECK(parts.size() > 1);
  std::string joined;
  for (const auto& ch : parts) {
    if (!joined.empty()) joined += "\n\n";
    joined += ch.text;
  }
  CHECK(joined == case33);
}
