#pragma once

// Internal helpers shared by the MR implementations.

#include <string>
#include <unordered_set>
#include <vector>

#include "codemorph/edits.hpp"
#include "codemorph/mr.hpp"
#include "codemorph/parser.hpp"

namespace codemorph::internal {

struct UnitView {
  std::string source;
  SyntaxTree tree;
  std::unordered_set<std::string> identifiers;  // every identifier token text
};

// Parses (wrapping fragments) and collects the identifier set. Throws
// ParseFatal.
UnitView make_unit(const std::string& source);

// Finishes an MR application: applies the edits, computes the change flag
// and packages the outcome.
MrOutcome finish(const UnitView& unit, std::vector<TextEdit> edits,
                 RenameMap rename_map = {});

// True when evaluating the node can have no side effects: identifiers,
// literals, field/array accesses and operator combinations thereof; no
// calls, allocations, assignments or increments.
bool side_effect_free(const SyntaxNode* n, std::string_view src);

// Fresh-name helper: smallest name `base + infix + C` (C starting at
// `counter`) that collides neither with unit identifiers nor with already
// assigned names; advances `counter` past the chosen value.
std::string fresh_name(const std::string& base, const std::string& infix,
                       int& counter, const std::unordered_set<std::string>& taken,
                       std::unordered_set<std::string>& assigned);

// Reconstructs node text from the original source, substituting
// `replacement(child)` texts where provided. Used by the recursive
// rewrite relations.
class Rewriter {
 public:
  explicit Rewriter(std::string_view src) : src_(src) {}
  virtual ~Rewriter() = default;

  // Renders a node, applying overrides bottom-up.
  std::string render(const SyntaxNode* n) {
    std::string transformed;
    if (transform(n, transformed)) return transformed;
    return render_children(n);
  }

  // Emits one edit per outermost transformed node under `root`; nested
  // transforms are folded into the outer node's rendering.
  void emit(const SyntaxNode* root, std::vector<TextEdit>& edits) {
    std::string out;
    if (transform(root, out)) {
      edits.push_back(TextEdit{root->span, std::move(out)});
      return;
    }
    for (const SyntaxNode* c : root->children) emit(c, edits);
  }

 protected:
  // Returns true and fills `out` when this node is rewritten.
  virtual bool transform(const SyntaxNode* n, std::string& out) = 0;

  std::string render_children(const SyntaxNode* n) {
    if (n->leaf || n->children.empty()) return std::string(n->text(src_));
    std::string out;
    std::size_t cursor = n->span.start;
    for (const SyntaxNode* c : n->children) {
      out.append(src_.substr(cursor, c->span.start - cursor));
      out.append(render(c));
      cursor = c->span.end;
    }
    out.append(src_.substr(cursor, n->span.end - cursor));
    return out;
  }

  std::string_view src_;
};

}  // namespace codemorph::internal
