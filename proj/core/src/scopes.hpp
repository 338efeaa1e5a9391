#pragma once

// Internal: scope-aware identifier resolution over a SyntaxTree. Used by
// the rename relations (declaration/usage sites) and the local type
// heuristics (declared type of a usage).

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "codemorph/parser.hpp"

namespace codemorph::internal {

struct DeclInfo {
  enum class Category { kLocal, kParam, kField };
  const SyntaxNode* name_node = nullptr;
  std::string name;
  std::string type_text;  // may be empty (inferred lambda params)
  Category category = Category::kLocal;
};

struct ScopeAnalysis {
  std::deque<DeclInfo> decls;
  // Declaration-site name identifiers in document order (locals and params
  // only; fields are resolvable but never renamed).
  std::vector<DeclInfo*> declaration_order;
  // usage identifier node -> resolved declaration
  std::unordered_map<const SyntaxNode*, DeclInfo*> usages;
};

ScopeAnalysis analyze_scopes(const SyntaxTree& tree);

}  // namespace codemorph::internal
