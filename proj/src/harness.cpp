#include "symboleo/harness.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "json.hpp"
#include "symboleo/linter.hpp"
#include "symboleo/parser.hpp"
#include "symboleo/printer.hpp"
#include "symboleo/report.hpp"

namespace symboleo {

namespace fs = std::filesystem;

std::optional<RunMode> run_mode_from_name(std::string_view name) {
  if (name == "live") return RunMode::Live;
  if (name == "replay") return RunMode::Replay;
  if (name == "record") return RunMode::Record;
  return std::nullopt;
}

std::string_view run_mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Live: return "live";
    case RunMode::Replay: return "replay";
    case RunMode::Record: return "record";
  }
  return "";
}

std::string_view PipelineError::kind_name() const {
  switch (kind_) {
    case Kind::Auth: return "auth";
    case Kind::Transport: return "transport";
    case Kind::Timeout: return "timeout";
    case Kind::BadResponse: return "bad-response";
    case Kind::MissingFixture: return "missing-fixture";
    case Kind::NoCodeFound: return "no-code-found";
  }
  return "";
}

namespace {

std::string iso_utc_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

class HttpTransport : public Transport {
 public:
  std::string complete(const EndpointConfig& endpoint,
                       const std::vector<Message>& messages) override {
    std::string key;
    if (!endpoint.api_key_env.empty()) {
      const char* value = std::getenv(endpoint.api_key_env.c_str());
      if (!value || !*value) {
        throw PipelineError(PipelineError::Kind::Auth,
                            "environment variable '" + endpoint.api_key_env +
                                "' is not set; refusing to contact the endpoint");
      }
      key = value;
    }
    if (endpoint.base_url.rfind("https://", 0) == 0) {
      throw PipelineError(PipelineError::Kind::Transport,
                          "this build speaks plain http only; use an http:// proxy");
    }
    httplib::Client client(endpoint.base_url);
    auto seconds = static_cast<time_t>(endpoint.timeout_seconds);
    auto micros = static_cast<time_t>((endpoint.timeout_seconds - double(seconds)) * 1e6);
    client.set_connection_timeout(seconds, micros);
    client.set_read_timeout(seconds, micros);
    client.set_write_timeout(seconds, micros);

    nlohmann::json body;
    body["model"] = endpoint.model;
    body["messages"] = nlohmann::json::array();
    for (const auto& m : messages) {
      body["messages"].push_back({{"role", m.role}, {"content", m.content}});
    }
    httplib::Headers headers;
    if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);
    auto res = client.Post(endpoint.chat_path, headers, body.dump(), "application/json");
    if (!res) {
      auto err = res.error();
      bool timeout = err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read ||
                     err == httplib::Error::Write;
      throw PipelineError(timeout ? PipelineError::Kind::Timeout
                                  : PipelineError::Kind::Transport,
                          "request failed: " + httplib::to_string(err));
    }
    if (res->status != 200) {
      throw PipelineError(PipelineError::Kind::Transport,
                          "endpoint returned status " + std::to_string(res->status));
    }
    try {
      nlohmann::json reply = nlohmann::json::parse(res->body);
      return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const std::exception& e) {
      throw PipelineError(PipelineError::Kind::BadResponse,
                          std::string("malformed completion payload: ") + e.what());
    }
  }
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool contains_word(const std::string& text, const std::string& word) {
  size_t pos = 0;
  while ((pos = text.find(word, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !ident_char(text[pos - 1]);
    size_t end = pos + word.size();
    bool right_ok = end >= text.size() || !ident_char(text[end]);
    if (left_ok && right_ok) return true;
    pos = end;
  }
  return false;
}

bool looks_like_code_region(const std::string& region) {
  static const std::vector<std::string> anchors = {
      "Domain",      "Contract",       "Declarations", "Preconditions",
      "Postconditions", "Obligations", "SurvivingObligations", "Powers",
      "Constraints", "endDomain",
  };
  if (region.find(';') == std::string::npos) return false;
  for (const auto& word : anchors) {
    if (contains_word(region, word)) return true;
  }
  return false;
}

std::string rstrip(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

std::string first_nonblank_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = rstrip(line);
    size_t b = t.find_first_not_of(" \t");
    if (b != std::string::npos) return t.substr(b);
  }
  return "";
}

}  // namespace

std::unique_ptr<Transport> make_http_transport() { return std::make_unique<HttpTransport>(); }

std::string endpoint_fixture_key(const EndpointConfig& endpoint) {
  std::string key;
  for (char c : endpoint.model) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else if (!key.empty() && key.back() != '-') {
      key += '-';
    }
  }
  while (!key.empty() && key.back() == '-') key.pop_back();
  return key.empty() ? "default" : key;
}

std::string case_dir_name(int case_id) {
  std::ostringstream out;
  out << "case-";
  if (case_id < 10) out << '0';
  out << case_id;
  return out.str();
}

std::string fixture_path_for(const EndpointConfig& endpoint, int case_id) {
  return (fs::path(endpoint.fixture_dir) / endpoint_fixture_key(endpoint) /
          (case_dir_name(case_id) + ".txt"))
      .string();
}

std::string send_prompt(const std::vector<PromptChunk>& chunks, const EndpointConfig& endpoint,
                        Transport* transport, int case_id) {
  if (endpoint.mode == RunMode::Replay) {
    fs::path path = fixture_path_for(endpoint, case_id);
    if (!fs::exists(path)) {
      throw PipelineError(PipelineError::Kind::MissingFixture,
                          "no recorded response at " + path.string());
    }
    return read_file(path);
  }
  if (!transport) {
    throw PipelineError(PipelineError::Kind::Transport, "no transport configured for live runs");
  }
  std::vector<Message> conversation;
  std::string reply;
  for (const auto& chunk : chunks) {
    conversation.push_back({"user", chunk.text});
    reply = transport->complete(endpoint, conversation);
    conversation.push_back({"assistant", reply});
  }
  if (endpoint.mode == RunMode::Record) {
    write_file(fixture_path_for(endpoint, case_id), reply);
  }
  return reply;
}

std::optional<std::string> extract_code(const std::string& response) {
  // Fenced blocks first.
  std::vector<std::string> blocks;
  {
    std::istringstream in(response);
    std::string line;
    bool in_block = false;
    std::string current;
    while (std::getline(in, line)) {
      std::string trimmed = line;
      size_t b = trimmed.find_first_not_of(" \t");
      trimmed = b == std::string::npos ? "" : trimmed.substr(b);
      if (trimmed.rfind("```", 0) == 0) {
        if (in_block) {
          blocks.push_back(current);
          current.clear();
          in_block = false;
        } else {
          in_block = true;
        }
        continue;
      }
      if (in_block) {
        current += line;
        current += '\n';
      }
    }
    if (in_block && !rstrip(current).empty()) blocks.push_back(current);  // unterminated fence
  }
  if (!blocks.empty()) {
    for (const auto& block : blocks) {
      std::string head = first_nonblank_line(block);
      if (head.rfind("Domain", 0) == 0 || head.rfind("Contract", 0) == 0) {
        std::string code = rstrip(block);
        if (!code.empty()) return code;
      }
    }
    std::string code = rstrip(blocks.front());
    if (!code.empty()) return code;
    return std::nullopt;
  }
  // No fences: the longest blank-line-delimited region that looks like code.
  std::vector<std::string> regions;
  {
    std::istringstream in(response);
    std::string line;
    std::string current;
    auto flush = [&]() {
      if (!rstrip(current).empty()) regions.push_back(current);
      current.clear();
    };
    while (std::getline(in, line)) {
      if (rstrip(line).empty()) {
        flush();
      } else {
        current += line;
        current += '\n';
      }
    }
    flush();
  }
  const std::string* best = nullptr;
  for (const auto& region : regions) {
    if (!looks_like_code_region(region)) continue;
    if (!best || region.size() > best->size()) best = &region;
  }
  if (!best) return std::nullopt;
  std::string code = rstrip(*best);
  if (code.empty()) return std::nullopt;
  return code;
}

std::string record_to_json(const RunRecord& record) {
  nlohmann::json j;
  j["version"] = 1;
  j["case"] = record.case_id;
  j["scenario"] = record.scenario;
  j["group"] = record.group;
  j["model"] = record.model;
  j["mode"] = record.mode;
  j["prompt"] = record.prompt;
  j["chunk_count"] = record.chunk_count;
  j["response"] = record.response;
  j["extracted"] = record.extracted ? nlohmann::json(*record.extracted) : nlohmann::json(nullptr);
  j["canonical"] = record.canonical ? nlohmann::json(*record.canonical) : nlohmann::json(nullptr);
  j["diagnostics"] = nlohmann::json::array();
  for (const auto& d : record.diagnostics) j["diagnostics"].push_back(diagnostic_to_json(d));
  j["score"] = record.score ? score_to_json(*record.score) : nlohmann::json(nullptr);
  j["error"] = record.error;
  j["started_at"] = record.started_at;
  j["finished_at"] = record.finished_at;
  return j.dump(2) + "\n";
}

RunRecord record_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunRecord r;
  r.case_id = j.at("case").get<int>();
  r.scenario = j.at("scenario").get<std::string>();
  r.group = j.at("group").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.prompt = j.at("prompt").get<std::string>();
  r.chunk_count = j.at("chunk_count").get<int>();
  r.response = j.at("response").get<std::string>();
  if (!j.at("extracted").is_null()) r.extracted = j.at("extracted").get<std::string>();
  if (!j.at("canonical").is_null()) r.canonical = j.at("canonical").get<std::string>();
  for (const auto& d : j.at("diagnostics")) r.diagnostics.push_back(diagnostic_from_json(d));
  if (!j.at("score").is_null()) r.score = score_from_json(j.at("score"));
  r.error = j.at("error").get<std::string>();
  r.started_at = j.at("started_at").get<std::string>();
  r.finished_at = j.at("finished_at").get<std::string>();
  return r;
}

namespace {

std::string unique_run_id(const fs::path& root) {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "run-%Y%m%d-%H%M%S", &tm);
  std::string base = buf;
  std::string id = base;
  int suffix = 1;
  while (fs::exists(root / id)) {
    id = base + "-" + std::to_string(++suffix);
  }
  return id;
}

void persist_record(const fs::path& run_dir, const RunRecord& record) {
  fs::path dir = run_dir / case_dir_name(record.case_id);
  write_file(dir / "prompt.txt", record.prompt);
  write_file(dir / "response.txt", record.response);
  if (record.extracted) write_file(dir / "extracted.symboleo", *record.extracted);
  if (record.canonical) write_file(dir / "canonical.symboleo", *record.canonical);
  write_file(dir / "record.json", record_to_json(record));
}

}  // namespace

RunSummary run_pipeline(const std::vector<PromptConfig>& configs, const PromptAssets& assets,
                        const EndpointConfig& endpoint, Transport* transport,
                        const RunOptions& options) {
  RunSummary summary;
  fs::path run_dir;
  if (!options.run_root.empty()) {
    fs::path root(options.run_root);
    fs::create_directories(root);
    std::string id = options.run_id.empty() ? unique_run_id(root) : options.run_id;
    run_dir = root / id;
    fs::create_directories(run_dir);
    summary.run_dir = run_dir.string();
  }

  int position = 0;
  for (const auto& config : configs) {
    ++position;
    RunRecord record;
    record.case_id = config.case_id.value_or(position);
    record.scenario = scenario_label(config);
    record.group = group_label(config);
    record.model = endpoint.model;
    record.mode = std::string(run_mode_name(endpoint.mode));
    record.started_at = iso_utc_now();
    try {
      record.prompt = assemble(config, assets);
      std::vector<PromptChunk> chunks;
      if (options.max_prompt_chars > 0) {
        chunks = split_for_limit(record.prompt, options.max_prompt_chars);
      } else {
        chunks.push_back({record.prompt, false});
      }
      record.chunk_count = static_cast<int>(chunks.size());
      record.response = send_prompt(chunks, endpoint, transport, record.case_id);
      auto code = extract_code(record.response);
      if (!code) {
        throw PipelineError(PipelineError::Kind::NoCodeFound,
                            "no Symboleo code found in the response");
      }
      record.extracted = code;
      ParseResult parsed = parse(*code);
      record.diagnostics = parsed.diagnostics;
      if (parsed.spec) {
        record.canonical = format(*parsed.spec);
        for (auto& d : lint(*parsed.spec)) record.diagnostics.push_back(std::move(d));
        std::stable_sort(record.diagnostics.begin(), record.diagnostics.end(), diagnostic_before);
      }
    } catch (const PipelineError& e) {
      record.error = std::string(e.kind_name()) + ": " + e.what();
    } catch (const std::exception& e) {
      record.error = e.what();
    }
    std::vector<Annotation> case_annotations;
    for (const auto& a : options.annotations) {
      if (a.case_id == record.case_id) case_annotations.push_back(a);
    }
    if (!case_annotations.empty() || (record.error.empty() && record.extracted)) {
      ScoreReport score_report = score(merge(record.diagnostics, case_annotations));
      score_report.label = case_dir_name(record.case_id);
      record.score = score_report;
    }
    record.finished_at = iso_utc_now();
    if (!summary.run_dir.empty()) persist_record(run_dir, record);
    summary.records.push_back(std::move(record));
  }

  if (!summary.run_dir.empty()) {
    nlohmann::json index = nlohmann::json::array();
    for (const auto& r : summary.records) {
      nlohmann::json row;
      row["case"] = r.case_id;
      row["scenario"] = r.scenario;
      row["group"] = r.group;
      row["total"] = r.score ? nlohmann::json(r.score->total) : nlohmann::json(nullptr);
      row["error"] = r.error;
      index.push_back(row);
    }
    write_file(run_dir / "summary.json", index.dump(2) + "\n");
  }
  return summary;
}

}  // namespace symboleo
