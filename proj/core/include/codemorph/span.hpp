#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace codemorph {

// Half-open byte range [start, end) into a source text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool empty() const { return start == end; }
  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool operator==(const Span&) const = default;
};

inline std::string_view slice(std::string_view text, Span span) {
  return text.substr(span.start, span.end - span.start);
}

// One ordered rewrite: replace source[span] with `replacement`.
// Offsets are always interpreted against the original text.
struct TextEdit {
  Span span;
  std::string replacement;
};

}  // namespace codemorph
