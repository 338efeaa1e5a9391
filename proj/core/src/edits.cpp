#include "codemorph/edits.hpp"

#include <algorithm>

#include "codemorph/errors.hpp"

namespace codemorph {

std::string apply_edits(std::string_view source, std::vector<TextEdit> edits) {
  std::stable_sort(edits.begin(), edits.end(),
                   [](const TextEdit& a, const TextEdit& b) {
                     if (a.span.start != b.span.start)
                       return a.span.start < b.span.start;
                     return a.span.end < b.span.end;
                   });

  std::string out;
  out.reserve(source.size());
  std::size_t cursor = 0;
  for (const TextEdit& edit : edits) {
    if (edit.span.end > source.size() || edit.span.start > edit.span.end) {
      throw OverlapError("edit span out of bounds");
    }
    if (edit.span.start < cursor) {
      throw OverlapError("overlapping edit spans");
    }
    out.append(source.substr(cursor, edit.span.start - cursor));
    out.append(edit.replacement);
    cursor = edit.span.end;
  }
  out.append(source.substr(cursor));
  return out;
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
      out.push_back('\n');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

bool text_differs(std::string_view before, std::string_view after) {
  return normalize_newlines(before) != normalize_newlines(after);
}

}  // namespace codemorph
