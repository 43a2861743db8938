#include "symboleo/scorer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace symboleo {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '|') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

int parse_int(const std::string& text, int line, const std::string& what) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw AnnotationError(line, "invalid " + what + " '" + text + "'");
  }
}

}  // namespace

std::vector<Annotation> read_annotations(std::istream& in) {
  std::vector<Annotation> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split_fields(body);
    if (fields.size() != 5) {
      throw AnnotationError(line_no, "expected 5 '|'-separated fields, got " +
                                         std::to_string(fields.size()));
    }
    Annotation a;
    a.line = line_no;
    a.case_id = parse_int(fields[0], line_no, "case id");
    if (a.case_id < 1) throw AnnotationError(line_no, "case id must be positive");
    auto section = section_from_name(fields[1]);
    if (!section) throw AnnotationError(line_no, "unknown section '" + fields[1] + "'");
    a.section = *section;
    auto type = error_type_from_id(parse_int(fields[2], line_no, "error type id"));
    if (!type) throw AnnotationError(line_no, "error type id out of range: " + fields[2]);
    a.type = *type;
    a.count = parse_int(fields[3], line_no, "count");
    if (a.count < 1) throw AnnotationError(line_no, "count must be at least 1");
    a.note = fields[4];
    if (a.note.rfind("weight=", 0) == 0) {
      size_t end = a.note.find_first_of("; \t", 7);
      std::string num = end == std::string::npos ? a.note.substr(7) : a.note.substr(7, end - 7);
      a.weight_override = parse_int(num, line_no, "weight override");
      if (a.weight_override < 1 || a.weight_override > weight_of(a.type)) {
        throw AnnotationError(line_no, "weight override out of range");
      }
      if (a.section != Section::ContractStructure) {
        throw AnnotationError(line_no,
                              "weight overrides are only accepted for the Cont section");
      }
      std::string rest = end == std::string::npos ? "" : a.note.substr(end + 1);
      while (!rest.empty() && (rest.front() == ' ' || rest.front() == ';')) rest.erase(0, 1);
      a.note = "weight=" + std::to_string(a.weight_override) +
               (rest.empty() ? "" : "; " + rest);
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Annotation> read_annotations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open annotation file: " + path);
  return read_annotations(in);
}

std::string write_annotations(const std::vector<Annotation>& annotations) {
  std::ostringstream out;
  for (const auto& a : annotations) {
    out << a.case_id << " | " << section_short_name(a.section) << " | "
        << static_cast<int>(a.type) << " | " << a.count << " | " << a.note << '\n';
  }
  return out.str();
}

std::vector<Finding> merge(const std::vector<Diagnostic>& diagnostics,
                           const std::vector<Annotation>& annotations) {
  // Key: section, type, override. Manual counts replace auto counts for the
  // same key (the reviewer counted the real occurrences; the automated pass
  // corroborates them).
  std::map<std::tuple<int, int, int>, Finding> merged;
  auto slot = [&merged](Section s, ErrorType t, int override_w) -> Finding& {
    auto key = std::make_tuple(static_cast<int>(s), static_cast<int>(t), override_w);
    auto it = merged.find(key);
    if (it == merged.end()) {
      Finding f;
      f.section = s;
      f.type = t;
      f.count = 0;
      f.weight_override = override_w;
      it = merged.emplace(key, f).first;
    }
    return it->second;
  };
  for (const auto& d : diagnostics) {
    Finding& f = slot(d.section, d.type, 0);
    f.count += 1;
  }
  for (const auto& a : annotations) {
    Finding& f = slot(a.section, a.type, a.weight_override);
    if (f.origin == Origin::Auto && f.count > 0) {
      f.corroborated = true;
      f.count = 0;  // manual counts take precedence over the auto tally
    }
    if (f.origin == Origin::Manual) {
      f.count += a.count;  // several records may refine the same bucket
    } else {
      f.origin = Origin::Manual;
      f.count = a.count;
    }
  }
  std::vector<Finding> out;
  for (auto& [key, f] : merged) {
    if (f.count > 0) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
    if (a.section != b.section) return static_cast<int>(a.section) < static_cast<int>(b.section);
    return static_cast<int>(a.type) < static_cast<int>(b.type);
  });
  return out;
}

ScoreReport score(const std::vector<Finding>& findings) {
  ScoreReport report;
  for (const auto& f : findings) {
    report.sections[static_cast<int>(f.section)] += f.points();
    report.total += f.points();
  }
  return report;
}

Equivalence compare(const ScoreReport& a, const ScoreReport& b, int margin) {
  int delta = a.total - b.total;
  if (delta < 0) delta = -delta;
  return delta <= margin ? Equivalence::Equivalent : Equivalence::Different;
}

FrequencyReport frequency(const std::vector<Finding>& findings) {
  FrequencyReport report;
  std::array<int, kErrorTypeCount> counts{};
  for (const auto& f : findings) {
    counts[static_cast<int>(f.type) - 1] += f.count;
    report.total_instances += f.count;
  }
  for (int i = 0; i < kErrorTypeCount; ++i) {
    if (counts[i] == 0) continue;
    FrequencyRow row;
    row.type = static_cast<ErrorType>(i + 1);
    row.count = counts[i];
    row.share = report.total_instances ? double(counts[i]) / report.total_instances : 0.0;
    report.rows.push_back(row);
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const FrequencyRow& a, const FrequencyRow& b) {
    if (a.count != b.count) return a.count > b.count;
    return static_cast<int>(a.type) < static_cast<int>(b.type);
  });
  auto band = [&](std::string label, std::vector<ErrorType> types) {
    FrequencyBand b;
    b.label = std::move(label);
    b.types = std::move(types);
    for (ErrorType t : b.types) b.count += counts[static_cast<int>(t) - 1];
    b.share = report.total_instances ? double(b.count) / report.total_instances : 0.0;
    report.bands.push_back(std::move(b));
  };
  band("frequent", {ErrorType::GrammarInconsistency, ErrorType::MisidentifiedEnvironmentVariables,
                    ErrorType::IncorrectSyntax});
  band("moderate",
       {ErrorType::MissingElementsIdentification, ErrorType::MissingConditions,
        ErrorType::MisunderstoodStructureRoles, ErrorType::IncorrectDataType,
        ErrorType::WrongLogic, ErrorType::MissingAttributes});
  band("rare", {ErrorType::IncorrectElementsIdentification, ErrorType::InformationFromOutsideQuery,
                ErrorType::MissingCalculations, ErrorType::MissingAllAttributes,
                ErrorType::IncorrectCalculations, ErrorType::UnnecessaryInformation,
                ErrorType::MissingParameters});
  return report;
}

}  // namespace symboleo
