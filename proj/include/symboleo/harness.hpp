#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symboleo/promptgen.hpp"
#include "symboleo/scorer.hpp"
#include "symboleo/taxonomy.hpp"

namespace symboleo {

enum class RunMode { Live, Replay, Record };

std::optional<RunMode> run_mode_from_name(std::string_view name);
std::string_view run_mode_name(RunMode mode);

// Where and how to talk to a model. The API key is never stored: only the
// NAME of the environment variable that holds it.
struct EndpointConfig {
  std::string base_url;  // e.g. "http://127.0.0.1:8080"
  std::string chat_path = "/v1/chat/completions";
  std::string model = "default";
  std::string api_key_env;  // empty = endpoint needs no auth
  double timeout_seconds = 60.0;
  RunMode mode = RunMode::Replay;
  std::string fixture_dir = "fixtures/responses";
};

struct Message {
  std::string role;
  std::string content;
};

class PipelineError : public std::runtime_error {
 public:
  enum class Kind { Auth, Transport, Timeout, BadResponse, MissingFixture, NoCodeFound };

  PipelineError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }
  std::string_view kind_name() const;

 private:
  Kind kind_;
};

// One chat round trip. Implementations must be safe to call repeatedly.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual std::string complete(const EndpointConfig& endpoint,
                               const std::vector<Message>& messages) = 0;
};

// HTTP implementation speaking the OpenAI-style chat-completions shape.
// Reads the key from the environment variable named in the endpoint config
// and fails with an Auth error before any network activity when it is unset.
std::unique_ptr<Transport> make_http_transport();

// Fixture file for one case: <fixture_dir>/<model-key>/case-NN.txt.
std::string endpoint_fixture_key(const EndpointConfig& endpoint);
std::string fixture_path_for(const EndpointConfig& endpoint, int case_id);
std::string case_dir_name(int case_id);  // "case-07"

// Sends the prompt chunks as one conversation (each chunk a user turn,
// carrying the full history forward) and returns the final assistant reply.
// Replay mode reads the fixture instead; record mode performs the live call
// and writes the fixture.
std::string send_prompt(const std::vector<PromptChunk>& chunks, const EndpointConfig& endpoint,
                        Transport* transport, int case_id);

// Pulls Symboleo source out of a model reply: the first fenced code block
// (preferring one that starts with Domain/Contract), else the longest
// blank-line-delimited region that looks like code. Empty results are never
// returned as success.
std::optional<std::string> extract_code(const std::string& response);

// Everything recorded about one pipeline case.
struct RunRecord {
  int case_id = 0;
  std::string scenario;
  std::string group;
  std::string model;
  std::string mode;
  std::string prompt;
  int chunk_count = 0;
  std::string response;
  std::optional<std::string> extracted;
  std::optional<std::string> canonical;  // formatted parse result
  std::vector<Diagnostic> diagnostics;   // parse + lint findings
  std::optional<ScoreReport> score;
  std::string error;  // empty on success
  std::string started_at;
  std::string finished_at;
};

std::string record_to_json(const RunRecord& record);
RunRecord record_from_json(const std::string& text);

struct RunOptions {
  std::string run_root;  // parent for run directories; empty = in-memory only
  std::string run_id;    // subdirectory name; empty = timestamp
  std::size_t max_prompt_chars = 0;  // 0 = single chunk
  std::vector<Annotation> annotations;  // manual findings, matched by case id
};

struct RunSummary {
  std::string run_dir;  // empty when nothing was persisted
  std::vector<RunRecord> records;
};

// Drives assemble -> send -> extract -> parse -> lint -> score for each
// configuration. A failing case is recorded and the batch continues. With a
// run root, each case is persisted under <run_root>/<run_id>/case-NN/.
RunSummary run_pipeline(const std::vector<PromptConfig>& configs, const PromptAssets& assets,
                        const EndpointConfig& endpoint, Transport* transport,
                        const RunOptions& options);

}  // namespace symboleo
