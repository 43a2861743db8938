#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symboleo/scorer.hpp"
#include "symboleo/taxonomy.hpp"

namespace symboleo {

enum class OutputFormat { Text, Csv, JsonLines };

std::optional<OutputFormat> output_format_from_name(std::string_view name);
std::string_view output_format_name(OutputFormat format);

// One scored case in the result table.
struct ReportRow {
  int case_id = 0;
  std::string scenario;  // "No.", "A", "AB", ...
  std::string group;     // "No grammar", "Grammar + theory", ...
  std::array<int, kSectionCount> sections{};
  int total = 0;

  friend bool operator==(const ReportRow& a, const ReportRow& b) {
    return a.case_id == b.case_id && a.scenario == b.scenario && a.group == b.group &&
           a.sections == b.sections && a.total == b.total;
  }
};

struct ReportTable {
  std::vector<ReportRow> rows;

  friend bool operator==(const ReportTable& a, const ReportTable& b) { return a.rows == b.rows; }
};

// Text rendering groups rows under their group headers, in row order.
std::string render_table_text(const ReportTable& table);
std::string render_table_csv(const ReportTable& table);
std::string render_table_json_lines(const ReportTable& table);
ReportTable parse_table_csv(const std::string& text);
ReportTable parse_table_json_lines(const std::string& text);

std::string render_frequency_text(const FrequencyReport& report);
std::string render_frequency_csv(const FrequencyReport& report);
std::string render_frequency_json_lines(const FrequencyReport& report);
FrequencyReport parse_frequency_csv(const std::string& text);

// Diagnostic serialization shared by the CLI and the run records.
std::string diagnostic_text_line(const Diagnostic& d, const std::string& file);
std::string render_diagnostics_text(const std::vector<Diagnostic>& ds, const std::string& file);
std::string render_diagnostics_csv(const std::vector<Diagnostic>& ds, const std::string& file);
std::string render_diagnostics_json_lines(const std::vector<Diagnostic>& ds,
                                          const std::string& file);
std::vector<Diagnostic> parse_diagnostics_csv(const std::string& text);
std::vector<Diagnostic> parse_diagnostics_json_lines(const std::string& text);

nlohmann::json diagnostic_to_json(const Diagnostic& d);
Diagnostic diagnostic_from_json(const nlohmann::json& j);
nlohmann::json score_to_json(const ScoreReport& report);
ScoreReport score_from_json(const nlohmann::json& j);

}  // namespace symboleo
