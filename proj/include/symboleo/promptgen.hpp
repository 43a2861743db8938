#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symboleo {

enum class Scenario { A, B, C };

char scenario_letter(Scenario s);
std::optional<Scenario> scenario_from_letter(char c);

// One prompt configuration: which optional blocks are included and which
// worked examples are shown, in order. Examples may not repeat.
struct PromptConfig {
  bool include_grammar = false;
  bool include_theory = false;
  bool include_emotional = false;
  std::vector<Scenario> examples;
  std::optional<int> case_id;  // position in the built-in 38-case matrix, when part of it

  friend bool operator==(const PromptConfig& a, const PromptConfig& b) {
    return a.include_grammar == b.include_grammar && a.include_theory == b.include_theory &&
           a.include_emotional == b.include_emotional && a.examples == b.examples &&
           a.case_id == b.case_id;
  }
};

// The fixed 38-case matrix: two baseline cases without the grammar (bare,
// and with all three examples), then four blocks of nine example orderings
// for each grammar/theory/emotional combination.
std::vector<PromptConfig> paper_matrix();

// "No." for no examples, otherwise the letters in order ("AB", "CA", ...).
std::string scenario_label(const PromptConfig& config);
// Coarse grouping used as table headers: "No grammar", "Grammar",
// "Grammar + emotional prompt", ...
std::string group_label(const PromptConfig& config);

struct ScenarioAssets {
  std::string contract_text;  // natural-language contract
  std::string spec_text;      // its Symboleo specification
};

struct PromptAssets {
  std::string base_statement;
  std::string grammar_text;  // raw grammar reference; header added on assembly
  std::string theory_text;
  std::string emotional_text;
  std::string final_query;
  std::map<Scenario, ScenarioAssets> scenarios;
};

class PromptError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads base.txt, grammar.txt, theory.txt, emotional.txt, query.txt and
// scenarios/<X>/{contract.txt,spec.symboleo} from a directory. Trailing
// newlines are stripped so block joining is exact.
PromptAssets load_prompt_assets(const std::string& dir);

// Deterministic assembly: the selected blocks joined with one blank line,
// ending with the final query (no trailing newline). Throws PromptError on
// duplicate examples or a requested scenario with no assets.
std::string assemble(const PromptConfig& config, const PromptAssets& assets);

struct PromptChunk {
  std::string text;
  bool oversize = false;  // single block longer than the limit
};

inline constexpr std::size_t kMinChunkChars = 1024;

// Packs the prompt's blank-line-separated blocks into chunks of at most
// max_chars. Blocks are never cut: one block over the limit becomes its own
// chunk, flagged oversize. max_chars below kMinChunkChars is rejected.
std::vector<PromptChunk> split_for_limit(const std::string& prompt, std::size_t max_chars);

}  // namespace symboleo
