#include "symboleo/promptgen.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace symboleo {

namespace {

const char* kGrammarHeader = "Here is Symboleo's syntax in Xtext format:";
const char* kBridge = "The corresponding Symboleo specification is:";
const char* kFirstFraming =
    "Here is the First example of a legal contract in natural language, followed by its "
    "Symboleo specification:";
const char* kSecondFraming =
    "Second example of a legal contract in natural language, followed by its Symboleo "
    "specification:";
const char* kThirdFraming =
    "Third example of a legal contract in natural language, followed by its Symboleo "
    "specification:";

std::string read_asset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PromptError("missing prompt asset: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

}  // namespace

char scenario_letter(Scenario s) {
  switch (s) {
    case Scenario::A: return 'A';
    case Scenario::B: return 'B';
    case Scenario::C: return 'C';
  }
  return '?';
}

std::optional<Scenario> scenario_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Scenario::A;
    case 'B': case 'b': return Scenario::B;
    case 'C': case 'c': return Scenario::C;
    default: return std::nullopt;
  }
}

std::vector<PromptConfig> paper_matrix() {
  std::vector<PromptConfig> matrix;
  auto add = [&matrix](bool grammar, bool theory, bool emotional, std::vector<Scenario> examples) {
    PromptConfig c;
    c.include_grammar = grammar;
    c.include_theory = theory;
    c.include_emotional = emotional;
    c.examples = std::move(examples);
    c.case_id = static_cast<int>(matrix.size()) + 1;
    matrix.push_back(std::move(c));
  };
  using S = Scenario;
  add(false, false, false, {});
  add(false, false, false, {S::A, S::B, S::C});
  const std::vector<std::vector<S>> orders = {
      {},           {S::A},       {S::A, S::B}, {S::A, S::B, S::C}, {S::A, S::C},
      {S::B, S::C}, {S::B, S::A}, {S::C, S::A}, {S::C, S::B},
  };
  for (auto [theory, emotional] : {std::pair{false, false}, std::pair{false, true},
                                   std::pair{true, false}, std::pair{true, true}}) {
    for (const auto& order : orders) add(true, theory, emotional, order);
  }
  return matrix;
}

std::string scenario_label(const PromptConfig& config) {
  if (config.examples.empty()) return "No.";
  std::string label;
  for (Scenario s : config.examples) label += scenario_letter(s);
  return label;
}

std::string group_label(const PromptConfig& config) {
  if (!config.include_grammar) return "No grammar";
  std::string label = "Grammar";
  if (config.include_theory) label += " + theory";
  if (config.include_emotional) label += " + emotional prompt";
  return label;
}

PromptAssets load_prompt_assets(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path root(dir);
  PromptAssets assets;
  assets.base_statement = read_asset(root / "base.txt");
  assets.grammar_text = read_asset(root / "grammar.txt");
  assets.theory_text = read_asset(root / "theory.txt");
  assets.emotional_text = read_asset(root / "emotional.txt");
  assets.final_query = read_asset(root / "query.txt");
  for (Scenario s : {Scenario::A, Scenario::B, Scenario::C}) {
    fs::path scenario_dir = root / "scenarios" / std::string(1, scenario_letter(s));
    if (!fs::exists(scenario_dir)) continue;
    ScenarioAssets sa;
    sa.contract_text = read_asset(scenario_dir / "contract.txt");
    sa.spec_text = read_asset(scenario_dir / "spec.symboleo");
    assets.scenarios.emplace(s, std::move(sa));
  }
  return assets;
}

std::string assemble(const PromptConfig& config, const PromptAssets& assets) {
  std::set<char> seen;
  for (Scenario s : config.examples) {
    if (!seen.insert(scenario_letter(s)).second) {
      throw PromptError(std::string("example scenario ") + scenario_letter(s) +
                        " requested twice");
    }
  }
  std::vector<std::string> blocks;
  blocks.push_back(assets.base_statement);
  if (config.include_grammar) {
    blocks.push_back(std::string(kGrammarHeader) + "\n" + assets.grammar_text);
  }
  if (config.include_theory) blocks.push_back(assets.theory_text);
  const char* framings[] = {kFirstFraming, kSecondFraming, kThirdFraming};
  for (size_t i = 0; i < config.examples.size(); ++i) {
    auto it = assets.scenarios.find(config.examples[i]);
    if (it == assets.scenarios.end()) {
      throw PromptError(std::string("no assets for example scenario ") +
                        scenario_letter(config.examples[i]));
    }
    blocks.push_back(framings[i]);
    blocks.push_back(it->second.contract_text);
    blocks.push_back(kBridge);
    blocks.push_back(it->second.spec_text);
  }
  if (config.include_emotional) blocks.push_back(assets.emotional_text);
  blocks.push_back(assets.final_query);

  std::ostringstream out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << "\n\n";
    out << blocks[i];
  }
  return out.str();
}

std::vector<PromptChunk> split_for_limit(const std::string& prompt, std::size_t max_chars) {
  if (max_chars < kMinChunkChars) {
    throw PromptError("chunk limit must be at least " + std::to_string(kMinChunkChars));
  }
  // Cut points are blank lines only; a block is a maximal run without one.
  std::vector<std::string> blocks;
  size_t pos = 0;
  while (pos <= prompt.size()) {
    size_t next = prompt.find("\n\n", pos);
    if (next == std::string::npos) {
      blocks.push_back(prompt.substr(pos));
      break;
    }
    blocks.push_back(prompt.substr(pos, next - pos));
    pos = next + 2;
  }
  std::vector<PromptChunk> chunks;
  std::string current;
  auto flush = [&]() {
    if (!current.empty()) {
      chunks.push_back({current, false});
      current.clear();
    }
  };
  for (const auto& block : blocks) {
    if (block.size() > max_chars) {
      flush();
      chunks.push_back({block, true});
      continue;
    }
    if (current.empty()) {
      current = block;
    } else if (current.size() + 2 + block.size() <= max_chars) {
      current += "\n\n";
      current += block;
    } else {
      flush();
      current = block;
    }
  }
  flush();
  if (chunks.empty()) chunks.push_back({"", false});
  return chunks;
}

}  // namespace symboleo
