// Command-line front end for the Symboleo toolkit.
//
// Subcommands:
//   parse    parse a specification and print its canonical form
//   lint     parse + semantic checks, printing diagnostics
//   score    merge diagnostics with an annotation file into a weighted report
//   prompts  assemble the 38-case prompt matrix (or a single case)
//   run      drive the prompt -> model -> validation pipeline
//   report   tabulate scores across a finished run
//
// Exit codes: 0 success, 1 findings or pipeline failures, 2 usage/input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symboleo/harness.hpp"
#include "symboleo/linter.hpp"
#include "symboleo/parser.hpp"
#include "symboleo/printer.hpp"
#include "symboleo/promptgen.hpp"
#include "symboleo/report.hpp"
#include "symboleo/scorer.hpp"

namespace fs = std::filesystem;
using namespace symboleo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

OutputFormat parse_format(const std::string& name) {
  auto format = output_format_from_name(name);
  if (!format) throw CLI::ValidationError("--format", "unknown format '" + name + "'");
  return *format;
}

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics, OutputFormat format,
                               const std::string& file) {
  switch (format) {
    case OutputFormat::Csv:
      return render_diagnostics_csv(diagnostics, file);
    case OutputFormat::JsonLines:
      return render_diagnostics_json_lines(diagnostics, file);
    case OutputFormat::Text:
      return render_diagnostics_text(diagnostics, file);
  }
  return "";
}

std::string render_score(const ScoreReport& report, OutputFormat format) {
  if (format == OutputFormat::JsonLines) return score_to_json(report).dump() + "\n";
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "label,cont,dom,dec,pre,pos,sig,op,cos,total\n" << report.label;
    for (int points : report.sections) out << ',' << points;
    out << ',' << report.total << "\n";
    return out.str();
  }
  out << "score " << (report.label.empty() ? "(unlabelled)" : report.label) << "\n";
  for (Section section : all_sections()) {
    int points = report.sections[static_cast<int>(section)];
    if (points == 0) continue;
    out << "  " << section_short_name(section) << ": " << points << "\n";
  }
  out << "  total: " << report.total << "\n";
  return out.str();
}

int run_parse(const std::string& input, const std::string& output, bool fragment, bool quiet,
              OutputFormat format) {
  std::string text = read_input(input);
  ParseOptions options;
  options.mode = fragment ? ParseMode::Fragment : ParseMode::Full;
  ParseResult result = parse(text, options);
  if (!quiet && !result.diagnostics.empty()) {
    std::cerr << render_diagnostics(result.diagnostics, format, input);
  }
  if (!result.spec) {
    std::cerr << "error: no specification could be recovered from " << input << "\n";
    return kExitFindings;
  }
  write_output(output, symboleo::format(*result.spec));
  return result.diagnostics.empty() ? kExitOk : kExitFindings;
}

int run_lint(const std::string& input, bool fragment, bool quiet, OutputFormat format) {
  std::string text = read_input(input);
  ParseOptions options;
  options.mode = fragment ? ParseMode::Fragment : ParseMode::Full;
  ParseResult result = parse(text, options);
  std::vector<Diagnostic> diagnostics = result.diagnostics;
  if (result.spec) {
    for (auto& d : lint(*result.spec)) diagnostics.push_back(std::move(d));
    std::stable_sort(diagnostics.begin(), diagnostics.end(), diagnostic_before);
  }
  if (!quiet) std::cout << render_diagnostics(diagnostics, format, input);
  if (!quiet && format == OutputFormat::Text) {
    std::cout << diagnostics.size() << " finding" << (diagnostics.size() == 1 ? "" : "s") << "\n";
  }
  return diagnostics.empty() ? kExitOk : kExitFindings;
}

int run_score(const std::string& input, const std::string& annotations_path,
              const std::string& label, int case_id, bool fragment, OutputFormat format) {
  std::vector<Diagnostic> diagnostics;
  if (!input.empty()) {
    std::string text = read_input(input);
    ParseOptions options;
    options.mode = fragment ? ParseMode::Fragment : ParseMode::Full;
    ParseResult result = parse(text, options);
    diagnostics = result.diagnostics;
    if (result.spec) {
      for (auto& d : lint(*result.spec)) diagnostics.push_back(std::move(d));
      std::stable_sort(diagnostics.begin(), diagnostics.end(), diagnostic_before);
    }
  }
  std::vector<Annotation> annotations;
  if (!annotations_path.empty()) {
    annotations = read_annotations_file(annotations_path);
    if (case_id > 0) {
      std::vector<Annotation> filtered;
      for (const auto& a : annotations) {
        if (a.case_id == case_id) filtered.push_back(a);
      }
      annotations = std::move(filtered);
    }
  }
  ScoreReport report = score(merge(diagnostics, annotations));
  report.label = label.empty() ? (case_id > 0 ? case_dir_name(case_id) : input) : label;
  std::cout << render_score(report, format);
  return report.total == 0 ? kExitOk : kExitFindings;
}

int run_prompts(const std::string& assets_dir, const std::string& out_dir, int case_id,
                std::size_t max_chars, bool list_only) {
  PromptAssets assets = load_prompt_assets(assets_dir);
  std::vector<PromptConfig> configs = paper_matrix();
  if (case_id > 0) {
    std::vector<PromptConfig> filtered;
    for (const auto& c : configs) {
      if (c.case_id == case_id) filtered.push_back(c);
    }
    if (filtered.empty()) throw std::runtime_error("no such case: " + std::to_string(case_id));
    configs = std::move(filtered);
  }
  if (list_only) {
    for (const auto& config : configs) {
      std::cout << case_dir_name(*config.case_id) << "  " << group_label(config) << "  "
                << scenario_label(config) << "\n";
    }
    return kExitOk;
  }
  for (const auto& config : configs) {
    std::string prompt = assemble(config, assets);
    if (out_dir.empty()) {
      if (configs.size() > 1) std::cout << "=== " << case_dir_name(*config.case_id) << " ===\n";
      std::cout << prompt << "\n";
      continue;
    }
    fs::create_directories(out_dir);
    std::string name = case_dir_name(*config.case_id);
    if (max_chars > 0) {
      auto chunks = split_for_limit(prompt, max_chars);
      for (std::size_t i = 0; i < chunks.size(); ++i) {
        std::ostringstream file;
        file << name << "-part" << (i + 1) << ".txt";
        write_output((fs::path(out_dir) / file.str()).string(), chunks[i].text + "\n");
      }
    } else {
      write_output((fs::path(out_dir) / (name + ".txt")).string(), prompt + "\n");
    }
  }
  return kExitOk;
}

int run_run(const std::string& assets_dir, EndpointConfig endpoint, const RunOptions& base_options,
            const std::vector<int>& case_ids, const std::string& annotations_path, bool quiet) {
  PromptAssets assets = load_prompt_assets(assets_dir);
  std::vector<PromptConfig> configs = paper_matrix();
  if (!case_ids.empty()) {
    std::vector<PromptConfig> filtered;
    for (int case_id : case_ids) {
      bool found = false;
      for (const auto& c : configs) {
        if (c.case_id == case_id) {
          filtered.push_back(c);
          found = true;
        }
      }
      if (!found) throw std::runtime_error("no such case: " + std::to_string(case_id));
    }
    configs = std::move(filtered);
  }
  RunOptions options = base_options;
  if (!annotations_path.empty()) options.annotations = read_annotations_file(annotations_path);
  std::unique_ptr<Transport> transport;
  if (endpoint.mode != RunMode::Replay) transport = make_http_transport();
  RunSummary summary = run_pipeline(configs, assets, endpoint, transport.get(), options);
  int failures = 0;
  for (const auto& record : summary.records) {
    if (!record.error.empty()) ++failures;
    if (quiet) continue;
    std::cout << case_dir_name(record.case_id) << "  ";
    if (!record.error.empty()) {
      std::cout << "FAILED  " << record.error << "\n";
    } else {
      std::cout << record.diagnostics.size() << " finding"
                << (record.diagnostics.size() == 1 ? "" : "s");
      if (record.score) std::cout << "  total=" << record.score->total;
      std::cout << "\n";
    }
  }
  if (!quiet && !summary.run_dir.empty()) {
    std::cout << "run written to " << summary.run_dir << "\n";
  }
  return failures == 0 ? kExitOk : kExitFindings;
}

int run_report(const std::string& run_dir, OutputFormat format, bool frequencies,
               const std::string& annotations_path) {
  if (frequencies) {
    if (annotations_path.empty()) {
      throw std::runtime_error("--frequencies needs --annotations");
    }
    std::vector<Annotation> annotations = read_annotations_file(annotations_path);
    FrequencyReport report = frequency(merge({}, annotations));
    switch (format) {
      case OutputFormat::Csv: std::cout << render_frequency_csv(report); break;
      case OutputFormat::JsonLines: std::cout << render_frequency_json_lines(report); break;
      case OutputFormat::Text: std::cout << render_frequency_text(report); break;
    }
    return kExitOk;
  }
  ReportTable table;
  std::vector<fs::path> case_dirs;
  for (const auto& entry : fs::directory_iterator(run_dir)) {
    if (entry.is_directory() && entry.path().filename().string().rfind("case-", 0) == 0) {
      case_dirs.push_back(entry.path());
    }
  }
  std::sort(case_dirs.begin(), case_dirs.end());
  for (const auto& dir : case_dirs) {
    fs::path record_path = dir / "record.json";
    if (!fs::exists(record_path)) continue;
    RunRecord record = record_from_json(read_input(record_path.string()));
    if (!record.score) continue;
    ReportRow row;
    row.case_id = record.case_id;
    row.scenario = record.scenario;
    row.group = record.group;
    row.sections = record.score->sections;
    row.total = record.score->total;
    table.rows.push_back(row);
  }
  if (table.rows.empty()) {
    throw std::runtime_error("no scored records under " + run_dir);
  }
  switch (format) {
    case OutputFormat::Csv: std::cout << render_table_csv(table); break;
    case OutputFormat::JsonLines: std::cout << render_table_json_lines(table); break;
    case OutputFormat::Text: std::cout << render_table_text(table); break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symboleo contract-specification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format: text, csv, json-lines")
      ->capture_default_str();
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress per-finding output");

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "Parse and pretty-print a specification");
  std::string parse_input;
  std::string parse_output = "-";
  bool parse_fragment = false;
  cmd_parse->add_option("input", parse_input, "Specification file ('-' for stdin)")->required();
  cmd_parse->add_option("-o,--output", parse_output, "Write the canonical form here");
  cmd_parse->add_flag("--fragment", parse_fragment, "Treat the input as a section fragment");

  // lint
  auto* cmd_lint = app.add_subcommand("lint", "Parse plus semantic checks");
  std::string lint_input;
  bool lint_fragment = false;
  cmd_lint->add_option("input", lint_input, "Specification file ('-' for stdin)")->required();
  cmd_lint->add_flag("--fragment", lint_fragment, "Treat the input as a section fragment");

  // score
  auto* cmd_score = app.add_subcommand("score", "Weighted error report");
  std::string score_input;
  std::string score_annotations;
  std::string score_label;
  int score_case = 0;
  bool score_fragment = false;
  cmd_score->add_option("input", score_input, "Specification file (optional)");
  cmd_score->add_option("-a,--annotations", score_annotations, "Manual annotation file");
  cmd_score->add_option("--label", score_label, "Label for the report");
  cmd_score->add_option("--case", score_case, "Keep only annotations for this case id");
  cmd_score->add_flag("--fragment", score_fragment, "Treat the input as a section fragment");

  // prompts
  auto* cmd_prompts = app.add_subcommand("prompts", "Assemble the prompt matrix");
  std::string prompts_assets = "assets";
  std::string prompts_out;
  int prompts_case = 0;
  std::size_t prompts_max_chars = 0;
  bool prompts_list = false;
  cmd_prompts->add_option("--assets", prompts_assets, "Prompt asset directory")
      ->capture_default_str();
  cmd_prompts->add_option("-o,--out-dir", prompts_out, "Write one file per case here");
  cmd_prompts->add_option("--case", prompts_case, "Assemble a single case (1-38)");
  cmd_prompts->add_option("--max-chars", prompts_max_chars,
                          "Split prompts into chunks of at most this many characters");
  cmd_prompts->add_flag("--list", prompts_list, "List case labels instead of assembling");

  // run
  auto* cmd_run = app.add_subcommand("run", "Drive the model pipeline");
  std::string run_assets = "assets";
  std::string run_mode = "replay";
  std::string run_annotations;
  std::vector<int> run_cases;
  EndpointConfig endpoint;
  RunOptions run_options;
  run_options.run_root = "runs";
  cmd_run->add_option("--assets", run_assets, "Prompt asset directory")->capture_default_str();
  cmd_run->add_option("--mode", run_mode, "live, replay, or record")->capture_default_str();
  cmd_run->add_option("--base-url", endpoint.base_url, "Endpoint base URL (http only)");
  cmd_run->add_option("--chat-path", endpoint.chat_path, "Completion route")
      ->capture_default_str();
  cmd_run->add_option("--model", endpoint.model, "Model name sent to the endpoint")
      ->capture_default_str();
  cmd_run->add_option("--api-key-env", endpoint.api_key_env,
                      "NAME of the environment variable holding the API key");
  cmd_run->add_option("--timeout", endpoint.timeout_seconds, "Request timeout in seconds")
      ->capture_default_str();
  cmd_run->add_option("--fixtures", endpoint.fixture_dir, "Recorded-response directory")
      ->capture_default_str();
  cmd_run->add_option("--run-root", run_options.run_root, "Directory that receives run output")
      ->capture_default_str();
  cmd_run->add_option("--run-id", run_options.run_id, "Name for this run (default: timestamp)");
  cmd_run->add_option("--max-chars", run_options.max_prompt_chars,
                      "Split prompts into chunks of at most this many characters");
  cmd_run->add_option("--cases,--case", run_cases, "Cases to run, e.g. --cases 2,33 (default: all)")
      ->delimiter(',');
  cmd_run->add_option("-a,--annotations", run_annotations, "Manual annotation file");

  // report
  auto* cmd_report = app.add_subcommand("report", "Tabulate a finished run");
  std::string report_run_dir;
  std::string report_annotations;
  bool report_frequencies = false;
  cmd_report->add_option("run_dir", report_run_dir, "Run directory (from 'run')");
  cmd_report->add_flag("--frequencies", report_frequencies,
                       "Error-type frequency bands from an annotation file");
  cmd_report->add_option("-a,--annotations", report_annotations, "Manual annotation file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes are 100+; fold them into the documented 0/2.
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputFormat format = parse_format(format_name);
    if (cmd_parse->parsed()) {
      return run_parse(parse_input, parse_output, parse_fragment, quiet, format);
    }
    if (cmd_lint->parsed()) return run_lint(lint_input, lint_fragment, quiet, format);
    if (cmd_score->parsed()) {
      return run_score(score_input, score_annotations, score_label, score_case, score_fragment,
                       format);
    }
    if (cmd_prompts->parsed()) {
      return run_prompts(prompts_assets, prompts_out, prompts_case, prompts_max_chars,
                         prompts_list);
    }
    if (cmd_run->parsed()) {
      auto mode = run_mode_from_name(run_mode);
      if (!mode) throw CLI::ValidationError("--mode", "unknown mode '" + run_mode + "'");
      endpoint.mode = *mode;
      return run_run(run_assets, endpoint, run_options, run_cases, run_annotations, quiet);
    }
    if (cmd_report->parsed()) {
      if (!report_frequencies && report_run_dir.empty()) {
        throw CLI::ValidationError("run_dir", "a run directory is required");
      }
      return run_report(report_run_dir, format, report_frequencies, report_annotations);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const AnnotationError& e) {
    std::cerr << "error: annotations line " << e.line() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const PromptError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
