#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codemorph/span.hpp"

namespace codemorph {

// Replaces every edit span with its replacement text. Edits are
// interpreted against the original source; they are stably sorted by
// (start, end) so that insertions at a position precede a replacement
// starting there. Throws OverlapError when two spans overlap.
std::string apply_edits(std::string_view source, std::vector<TextEdit> edits);

// Line endings normalized to LF (CRLF and lone CR both become LF).
std::string normalize_newlines(std::string_view text);

// True iff the two texts differ after newline normalization. This is the
// success check applied after each perturbation.
bool text_differs(std::string_view before, std::string_view after);

}  // namespace codemorph
