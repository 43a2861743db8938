#include "symboleo/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace symboleo {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

std::string format_share(double share) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(4) << share;
  return out.str();
}

}  // namespace

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json-lines" || name == "jsonl") return OutputFormat::JsonLines;
  return std::nullopt;
}

std::string_view output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::JsonLines: return "json-lines";
  }
  return "";
}

std::string render_table_text(const ReportTable& table) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "Scenario" << std::right << std::setw(5) << "Case";
  for (Section s : all_sections()) out << std::setw(6) << section_short_name(s);
  out << std::setw(6) << "Tot" << '\n';
  std::string group;
  bool first = true;
  for (const auto& row : table.rows) {
    if (first || row.group != group) {
      group = row.group;
      out << "-- " << group << '\n';
      first = false;
    }
    out << std::left << std::setw(10) << row.scenario << std::right << std::setw(5) << row.case_id;
    for (int v : row.sections) out << std::setw(6) << v;
    out << std::setw(6) << row.total << '\n';
  }
  return out.str();
}

std::string render_table_csv(const ReportTable& table) {
  std::ostringstream out;
  out << "case,scenario,group";
  for (Section s : all_sections()) {
    std::string name(section_short_name(s));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    out << ',' << name;
  }
  out << ",total\n";
  for (const auto& row : table.rows) {
    out << row.case_id << ',' << row.scenario << ',' << row.group;
    for (int v : row.sections) out << ',' << v;
    out << ',' << row.total << '\n';
  }
  return out.str();
}

ReportTable parse_table_csv(const std::string& text) {
  ReportTable table;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i == 0 || lines[i].empty()) continue;  // header
    auto fields = split_csv(lines[i]);
    if (fields.size() != 3 + kSectionCount + 1) {
      throw std::runtime_error("malformed table row: " + lines[i]);
    }
    ReportRow row;
    row.case_id = std::stoi(fields[0]);
    row.scenario = fields[1];
    row.group = fields[2];
    for (int s = 0; s < kSectionCount; ++s) row.sections[s] = std::stoi(fields[3 + s]);
    row.total = std::stoi(fields[3 + kSectionCount]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_table_json_lines(const ReportTable& table) {
  std::ostringstream out;
  for (const auto& row : table.rows) {
    nlohmann::json j;
    j["case"] = row.case_id;
    j["scenario"] = row.scenario;
    j["group"] = row.group;
    nlohmann::json sections = nlohmann::json::object();
    for (Section s : all_sections()) {
      sections[std::string(section_short_name(s))] = row.sections[static_cast<int>(s)];
    }
    j["sections"] = sections;
    j["total"] = row.total;
    out << j.dump() << '\n';
  }
  return out.str();
}

ReportTable parse_table_json_lines(const std::string& text) {
  ReportTable table;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    ReportRow row;
    row.case_id = j.at("case").get<int>();
    row.scenario = j.at("scenario").get<std::string>();
    row.group = j.at("group").get<std::string>();
    for (Section s : all_sections()) {
      row.sections[static_cast<int>(s)] =
          j.at("sections").at(std::string(section_short_name(s))).get<int>();
    }
    row.total = j.at("total").get<int>();
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_frequency_text(const FrequencyReport& report) {
  std::ostringstream out;
  out << "Error-type frequency (" << report.total_instances << " instances)\n";
  for (const auto& row : report.rows) {
    out << "  " << std::left << std::setw(46) << name_of(row.type) << std::right << std::setw(5)
        << row.count << "  " << std::fixed << std::setprecision(1) << row.share * 100.0 << "%\n";
  }
  for (const auto& band : report.bands) {
    out << band.label << ": " << band.count << " (" << std::fixed << std::setprecision(1)
        << band.share * 100.0 << "%)\n";
  }
  return out.str();
}

std::string render_frequency_csv(const FrequencyReport& report) {
  std::ostringstream out;
  out << "kind,id_or_label,name_or_types,count,share\n";
  for (const auto& row : report.rows) {
    out << "row," << static_cast<int>(row.type) << ',' << name_of(row.type) << ',' << row.count
        << ',' << format_share(row.share) << '\n';
  }
  for (const auto& band : report.bands) {
    out << "band," << band.label << ',';
    for (size_t i = 0; i < band.types.size(); ++i) {
      if (i) out << ';';
      out << static_cast<int>(band.types[i]);
    }
    out << ',' << band.count << ',' << format_share(band.share) << '\n';
  }
  return out.str();
}

FrequencyReport parse_frequency_csv(const std::string& text) {
  FrequencyReport report;
  for (const auto& line : split_lines(text)) {
    if (line.empty() || line.rfind("kind,", 0) == 0) continue;
    auto fields = split_csv(line);
    if (fields.size() != 5) throw std::runtime_error("malformed frequency row: " + line);
    if (fields[0] == "row") {
      FrequencyRow row;
      auto type = error_type_from_id(std::stoi(fields[1]));
      if (!type) throw std::runtime_error("bad error type id: " + fields[1]);
      row.type = *type;
      row.count = std::stoi(fields[3]);
      row.share = std::stod(fields[4]);
      report.rows.push_back(row);
      report.total_instances += row.count;
    } else if (fields[0] == "band") {
      FrequencyBand band;
      band.label = fields[1];
      std::istringstream ids(fields[2]);
      std::string id;
      while (std::getline(ids, id, ';')) {
        auto type = error_type_from_id(std::stoi(id));
        if (type) band.types.push_back(*type);
      }
      band.count = std::stoi(fields[3]);
      band.share = std::stod(fields[4]);
      report.bands.push_back(std::move(band));
    }
  }
  return report;
}

std::string render_frequency_json_lines(const FrequencyReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    nlohmann::json j;
    j["kind"] = "row";
    j["id"] = static_cast<int>(row.type);
    j["name"] = std::string(name_of(row.type));
    j["count"] = row.count;
    j["share"] = row.share;
    out << j.dump() << '\n';
  }
  for (const auto& band : report.bands) {
    nlohmann::json j;
    j["kind"] = "band";
    j["label"] = band.label;
    std::vector<int> ids;
    for (ErrorType t : band.types) ids.push_back(static_cast<int>(t));
    j["types"] = ids;
    j["count"] = band.count;
    j["share"] = band.share;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::string diagnostic_text_line(const Diagnostic& d, const std::string& file) {
  std::ostringstream out;
  out << (file.empty() ? "<input>" : file) << ':';
  if (d.span.known()) {
    out << d.span.start_line << ':' << d.span.start_col << ':';
  } else {
    out << "-:";
  }
  out << " [" << name_of(d.type) << ", w" << d.weight() << ", "
      << section_short_name(d.section) << "] " << d.message;
  return out.str();
}

std::string render_diagnostics_text(const std::vector<Diagnostic>& ds, const std::string& file) {
  std::ostringstream out;
  for (const auto& d : ds) out << diagnostic_text_line(d, file) << '\n';
  return out.str();
}

std::string render_diagnostics_csv(const std::vector<Diagnostic>& ds, const std::string& file) {
  std::ostringstream out;
  out << "file,start_line,start_col,end_line,end_col,section,type_id,type,weight,origin,message\n";
  for (const auto& d : ds) {
    std::string message = d.message;
    for (char& c : message) {
      if (c == ',') c = ';';  // keep the row single-field-per-column
      if (c == '\n') c = ' ';
    }
    out << (file.empty() ? "<input>" : file) << ',' << d.span.start_line << ','
        << d.span.start_col << ',' << d.span.end_line << ',' << d.span.end_col << ','
        << section_short_name(d.section) << ',' << static_cast<int>(d.type) << ','
        << name_of(d.type) << ',' << d.weight() << ','
        << (d.origin == Origin::Auto ? "auto" : "manual") << ',' << message << '\n';
  }
  return out.str();
}

std::vector<Diagnostic> parse_diagnostics_csv(const std::string& text) {
  std::vector<Diagnostic> out;
  auto lines = split_lines(text);
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto fields = split_csv(lines[i]);
    if (fields.size() != 11) throw std::runtime_error("malformed diagnostic row: " + lines[i]);
    Diagnostic d;
    d.span.start_line = std::stoi(fields[1]);
    d.span.start_col = std::stoi(fields[2]);
    d.span.end_line = std::stoi(fields[3]);
    d.span.end_col = std::stoi(fields[4]);
    auto section = section_from_name(fields[5]);
    if (!section) throw std::runtime_error("bad section: " + fields[5]);
    d.section = *section;
    auto type = error_type_from_id(std::stoi(fields[6]));
    if (!type) throw std::runtime_error("bad error type id: " + fields[6]);
    d.type = *type;
    d.origin = fields[9] == "manual" ? Origin::Manual : Origin::Auto;
    d.message = fields[10];
    out.push_back(std::move(d));
  }
  return out;
}

nlohmann::json diagnostic_to_json(const Diagnostic& d) {
  nlohmann::json j;
  j["type_id"] = static_cast<int>(d.type);
  j["type"] = std::string(name_of(d.type));
  j["weight"] = d.weight();
  j["section"] = std::string(section_short_name(d.section));
  j["origin"] = d.origin == Origin::Auto ? "auto" : "manual";
  j["message"] = d.message;
  if (d.span.known()) {
    j["span"] = {{"start_line", d.span.start_line},
                 {"start_col", d.span.start_col},
                 {"end_line", d.span.end_line},
                 {"end_col", d.span.end_col}};
  } else {
    j["span"] = nullptr;
  }
  return j;
}

Diagnostic diagnostic_from_json(const nlohmann::json& j) {
  Diagnostic d;
  auto type = error_type_from_id(j.at("type_id").get<int>());
  if (!type) throw std::runtime_error("bad error type id in diagnostic");
  d.type = *type;
  auto section = section_from_name(j.at("section").get<std::string>());
  if (!section) throw std::runtime_error("bad section in diagnostic");
  d.section = *section;
  d.origin = j.at("origin").get<std::string>() == "manual" ? Origin::Manual : Origin::Auto;
  d.message = j.at("message").get<std::string>();
  if (!j.at("span").is_null()) {
    const auto& span = j.at("span");
    d.span.start_line = span.at("start_line").get<int>();
    d.span.start_col = span.at("start_col").get<int>();
    d.span.end_line = span.at("end_line").get<int>();
    d.span.end_col = span.at("end_col").get<int>();
  }
  return d;
}

std::string render_diagnostics_json_lines(const std::vector<Diagnostic>& ds,
                                          const std::string& file) {
  std::ostringstream out;
  for (const auto& d : ds) {
    nlohmann::json j = diagnostic_to_json(d);
    j["file"] = file.empty() ? "<input>" : file;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::vector<Diagnostic> parse_diagnostics_json_lines(const std::string& text) {
  std::vector<Diagnostic> out;
  for (const auto& line : split_lines(text)) {
    if (line.empty()) continue;
    out.push_back(diagnostic_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

nlohmann::json score_to_json(const ScoreReport& report) {
  nlohmann::json j;
  j["label"] = report.label;
  nlohmann::json sections = nlohmann::json::object();
  for (Section s : all_sections()) {
    sections[std::string(section_short_name(s))] = report.sections[static_cast<int>(s)];
  }
  j["sections"] = sections;
  j["total"] = report.total;
  return j;
}

ScoreReport score_from_json(const nlohmann::json& j) {
  ScoreReport report;
  report.label = j.at("label").get<std::string>();
  for (Section s : all_sections()) {
    report.sections[static_cast<int>(s)] =
        j.at("sections").at(std::string(section_short_name(s))).get<int>();
  }
  report.total = j.at("total").get<int>();
  return report;
}

}  // namespace symboleo
