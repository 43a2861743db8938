// Python bindings: thin wrappers over the library's main operations, with
// plain dict/str/None results so callers need no C++ types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "symboleo/harness.hpp"
#include "symboleo/linter.hpp"
#include "symboleo/parser.hpp"
#include "symboleo/printer.hpp"
#include "symboleo/promptgen.hpp"
#include "symboleo/scorer.hpp"
#include "symboleo/taxonomy.hpp"

namespace py = pybind11;
using namespace symboleo;

namespace {

ParseMode mode_from_string(const std::string& mode) {
  if (mode == "auto") return ParseMode::Auto;
  if (mode == "full") return ParseMode::Full;
  if (mode == "fragment") return ParseMode::Fragment;
  throw py::value_error("mode must be 'auto', 'full' or 'fragment'");
}

py::dict diagnostic_dict(const Diagnostic& d) {
  py::dict out;
  out["type_id"] = static_cast<int>(d.type);
  out["type"] = std::string(name_of(d.type));
  out["weight"] = d.weight();
  out["section"] = std::string(section_short_name(d.section));
  out["message"] = d.message;
  if (d.span.known()) {
    out["span"] =
        py::make_tuple(d.span.start_line, d.span.start_col, d.span.end_line, d.span.end_col);
  } else {
    out["span"] = py::none();
  }
  return out;
}

py::dict score_dict(const ScoreReport& report) {
  py::dict sections;
  for (Section s : all_sections()) {
    sections[py::str(std::string(section_short_name(s)))] =
        report.sections[static_cast<int>(s)];
  }
  py::dict out;
  out["label"] = report.label;
  out["sections"] = sections;
  out["total"] = report.total;
  return out;
}

std::vector<Diagnostic> analyze(const std::string& text, const std::string& mode) {
  ParseOptions options;
  options.mode = mode_from_string(mode);
  ParseResult result = parse(text, options);
  std::vector<Diagnostic> diagnostics = result.diagnostics;
  if (result.spec) {
    for (auto& d : lint(*result.spec)) diagnostics.push_back(std::move(d));
    std::stable_sort(diagnostics.begin(), diagnostics.end(), diagnostic_before);
  }
  return diagnostics;
}

std::string py_canonical(const std::string& text, const std::string& mode) {
  ParseOptions options;
  options.mode = mode_from_string(mode);
  ParseResult result = parse(text, options);
  if (!result.spec) {
    std::ostringstream message;
    message << "no specification could be recovered";
    for (const auto& d : result.diagnostics) message << "\n  " << d.message;
    throw py::value_error(message.str());
  }
  return format(*result.spec);
}

py::list py_lint(const std::string& text, const std::string& mode) {
  py::list out;
  for (const auto& d : analyze(text, mode)) out.append(diagnostic_dict(d));
  return out;
}

py::dict py_score(const std::string& text, const std::string& annotations, int case_id,
                  const std::string& mode, const std::string& label) {
  std::vector<Diagnostic> diagnostics;
  if (!text.empty()) diagnostics = analyze(text, mode);
  std::vector<Annotation> parsed;
  if (!annotations.empty()) {
    std::istringstream in(annotations);
    parsed = read_annotations(in);
    if (case_id > 0) {
      std::vector<Annotation> kept;
      for (const auto& a : parsed) {
        if (a.case_id == case_id) kept.push_back(a);
      }
      parsed = std::move(kept);
    }
  }
  ScoreReport report = score(merge(diagnostics, parsed));
  report.label = label.empty() ? (case_id > 0 ? case_dir_name(case_id) : "") : label;
  return score_dict(report);
}

py::list py_prompt_matrix() {
  py::list out;
  for (const auto& config : paper_matrix()) {
    py::dict row;
    row["case"] = config.case_id.value_or(0);
    row["scenario"] = scenario_label(config);
    row["group"] = group_label(config);
    row["grammar"] = config.include_grammar;
    row["theory"] = config.include_theory;
    row["emotional"] = config.include_emotional;
    std::string letters;
    for (Scenario s : config.examples) letters += scenario_letter(s);
    row["examples"] = letters;
    out.append(row);
  }
  return out;
}

std::string py_assemble_prompt(int case_id, const std::string& assets_dir) {
  for (const auto& config : paper_matrix()) {
    if (config.case_id == case_id) {
      return assemble(config, load_prompt_assets(assets_dir));
    }
  }
  throw py::value_error("no such case: " + std::to_string(case_id));
}

py::list py_split_prompt(const std::string& prompt, std::size_t max_chars) {
  py::list out;
  for (const auto& chunk : split_for_limit(prompt, max_chars)) {
    py::dict row;
    row["text"] = chunk.text;
    row["oversize"] = chunk.oversize;
    out.append(row);
  }
  return out;
}

py::object py_extract_code(const std::string& response) {
  auto code = extract_code(response);
  if (!code) return py::none();
  return py::str(*code);
}

py::dict py_frequency(const std::string& annotations) {
  std::istringstream in(annotations);
  FrequencyReport report = frequency(merge({}, read_annotations(in)));
  py::list rows;
  for (const auto& row : report.rows) {
    py::dict r;
    r["id"] = static_cast<int>(row.type);
    r["name"] = std::string(name_of(row.type));
    r["count"] = row.count;
    r["share"] = row.share;
    rows.append(r);
  }
  py::list bands;
  for (const auto& band : report.bands) {
    py::dict b;
    b["label"] = band.label;
    py::list types;
    for (ErrorType t : band.types) types.append(static_cast<int>(t));
    b["types"] = types;
    b["count"] = band.count;
    b["share"] = band.share;
    bands.append(b);
  }
  py::dict out;
  out["total"] = report.total_instances;
  out["rows"] = rows;
  out["bands"] = bands;
  return out;
}

bool py_equivalent(int total_a, int total_b, int margin) {
  ScoreReport a;
  a.total = total_a;
  ScoreReport b;
  b.total = total_b;
  return compare(a, b, margin) == Equivalence::Equivalent;
}

py::list py_taxonomy() {
  py::list out;
  for (const auto& entry : taxonomy()) {
    py::dict row;
    row["id"] = static_cast<int>(entry.type);
    row["name"] = std::string(entry.name);
    row["tier"] = std::string(severity_name(entry.tier));
    row["weight"] = entry.weight;
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symboleo contract-specification toolkit";
  m.attr("__version__") = "0.1.0";
  m.attr("EQUIVALENCE_MARGIN") = kEquivalenceMargin;

  py::register_exception<PromptError>(m, "PromptError", PyExc_ValueError);
  py::register_exception<AnnotationError>(m, "AnnotationError", PyExc_ValueError);

  m.def("canonical", &py_canonical, py::arg("text"), py::arg("mode") = "auto",
        "Parse a specification and return its canonical formatting. Raises\n"
        "ValueError when nothing parseable is found.");
  m.def("lint", &py_lint, py::arg("text"), py::arg("mode") = "auto",
        "Parse plus semantic checks; returns one dict per finding.");
  m.def("score", &py_score, py::arg("text") = "", py::arg("annotations") = "",
        py::arg("case_id") = 0, py::arg("mode") = "auto", py::arg("label") = "",
        "Merge lint findings with manual annotation lines into a weighted\n"
        "per-section report.");
  m.def("prompt_matrix", &py_prompt_matrix,
        "The fixed 38-case prompt configuration matrix.");
  m.def("assemble_prompt", &py_assemble_prompt, py::arg("case_id"), py::arg("assets_dir"),
        "Deterministically assemble one prompt from the asset directory.");
  m.def("split_prompt", &py_split_prompt, py::arg("prompt"), py::arg("max_chars"),
        "Pack a prompt's blank-line blocks into chunks of at most max_chars.");
  m.def("extract_code", &py_extract_code, py::arg("response"),
        "Pull Symboleo source out of a model reply, or None.");
  m.def("frequency", &py_frequency, py::arg("annotations"),
        "Error-type instance counts and frequency bands for annotation lines.");
  m.def("equivalent", &py_equivalent, py::arg("total_a"), py::arg("total_b"),
        py::arg("margin") = kEquivalenceMargin,
        "Whether two weighted totals fall within the equivalence margin.");
  m.def("taxonomy", &py_taxonomy, "The sixteen-entry error-type registry.");
}
