#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "symboleo/taxonomy.hpp"

namespace symboleo {

// One manual annotation record: a reviewer counted `count` occurrences of an
// error type in a section of a case's output. The on-disk form is
// line-oriented: `caseId | section | typeId | count | note`, with '#'
// comments and blank lines ignored. A note starting with `weight=N` lowers
// the record's weight; that escape hatch is only accepted for the
// ContractStructure bucket.
struct Annotation {
  int case_id = 0;
  Section section = Section::ContractStructure;
  ErrorType type = ErrorType::IncorrectSyntax;
  int count = 1;
  std::string note;
  int weight_override = 0;  // 0 = registry weight
  int line = 0;             // line number in the source file, for messages

  int weight() const { return weight_override ? weight_override : weight_of(type); }

  friend bool operator==(const Annotation& a, const Annotation& b) {
    return a.case_id == b.case_id && a.section == b.section && a.type == b.type &&
           a.count == b.count && a.note == b.note && a.weight_override == b.weight_override;
  }
};

class AnnotationError : public std::runtime_error {
 public:
  AnnotationError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<Annotation> read_annotations(std::istream& in);
std::vector<Annotation> read_annotations_file(const std::string& path);
// Canonical serial form; read_annotations(write_annotations(x)) == x.
std::string write_annotations(const std::vector<Annotation>& annotations);

// A scored finding: error-type instances in one section. Auto findings come
// from lint diagnostics; manual ones from annotations. When both report the
// same (section, type), the manual count wins and `corroborated` is set.
struct Finding {
  Section section = Section::ContractStructure;
  ErrorType type = ErrorType::IncorrectSyntax;
  int count = 1;
  int weight_override = 0;
  Origin origin = Origin::Auto;
  bool corroborated = false;

  int weight() const { return weight_override ? weight_override : weight_of(type); }
  int points() const { return weight() * count; }
};

std::vector<Finding> merge(const std::vector<Diagnostic>& diagnostics,
                           const std::vector<Annotation>& annotations);

// Weighted error points per section plus the grand total.
struct ScoreReport {
  std::string label;
  std::array<int, kSectionCount> sections{};
  int total = 0;

  int section_points(Section s) const { return sections[static_cast<int>(s)]; }

  friend bool operator==(const ScoreReport& a, const ScoreReport& b) {
    return a.label == b.label && a.sections == b.sections && a.total == b.total;
  }
};

ScoreReport score(const std::vector<Finding>& findings);

// Two outputs are considered interchangeable when their totals differ by at
// most the margin (default 8 points).
enum class Equivalence { Equivalent, Different };
inline constexpr int kEquivalenceMargin = 8;
Equivalence compare(const ScoreReport& a, const ScoreReport& b, int margin = kEquivalenceMargin);

// Instance counts per error type across a finding set, with the fixed
// frequent / moderate / rare grouping.
struct FrequencyRow {
  ErrorType type;
  int count = 0;
  double share = 0.0;  // of all instances
};

struct FrequencyBand {
  std::string label;
  std::vector<ErrorType> types;
  int count = 0;
  double share = 0.0;
};

struct FrequencyReport {
  int total_instances = 0;
  std::vector<FrequencyRow> rows;    // descending by count, then by id
  std::vector<FrequencyBand> bands;  // frequent, moderate, rare
};

FrequencyReport frequency(const std::vector<Finding>& findings);

}  // namespace symboleo
