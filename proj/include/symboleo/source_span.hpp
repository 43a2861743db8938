#pragma once

#include <string>

namespace symboleo {

// Half-open in terms of columns would be ambiguous for one-char tokens, so
// spans are inclusive: [start_line:start_col, end_line:end_col], 1-based.
// A default-constructed span means "no location" (hand-built AST nodes,
// whole-document findings).
struct SourceSpan {
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool known() const { return start_line > 0; }

  friend bool operator==(const SourceSpan& a, const SourceSpan& b) {
    return a.start_line == b.start_line && a.start_col == b.start_col &&
           a.end_line == b.end_line && a.end_col == b.end_col;
  }

  // Order by start position, then end position; used to sort diagnostics.
  friend bool operator<(const SourceSpan& a, const SourceSpan& b) {
    if (a.start_line != b.start_line) return a.start_line < b.start_line;
    if (a.start_col != b.start_col) return a.start_col < b.start_col;
    if (a.end_line != b.end_line) return a.end_line < b.end_line;
    return a.end_col < b.end_col;
  }

  // Smallest span covering both inputs; unknown spans are absorbed.
  static SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
    if (!a.known()) return b;
    if (!b.known()) return a;
    SourceSpan out = a;
    if (b.start_line < out.start_line ||
        (b.start_line == out.start_line && b.start_col < out.start_col)) {
      out.start_line = b.start_line;
      out.start_col = b.start_col;
    }
    if (b.end_line > out.end_line ||
        (b.end_line == out.end_line && b.end_col > out.end_col)) {
      out.end_line = b.end_line;
      out.end_col = b.end_col;
    }
    return out;
  }

  bool contains(const SourceSpan& other) const {
    if (!known() || !other.known()) return false;
    bool starts_ok = start_line < other.start_line ||
                     (start_line == other.start_line && start_col <= other.start_col);
    bool ends_ok = end_line > other.end_line ||
                   (end_line == other.end_line && end_col >= other.end_col);
    return starts_ok && ends_ok;
  }

  std::string to_string() const;
};

}  // namespace symboleo
