#pragma once

// Internal: local, purely syntactic type heuristics. There is no symbol
// resolution beyond declarations visible in the same source unit; anything
// else is kUnknown and the relations skip it.

#include <string_view>

#include "codemorph/parser.hpp"
#include "scopes.hpp"

namespace codemorph::internal {

enum class JType {
  kInt,
  kLong,
  kShort,
  kByte,
  kChar,
  kFloat,
  kDouble,
  kBoolean,
  kString,
  kUnknown,
};

inline bool is_numeric(JType t) {
  switch (t) {
    case JType::kInt:
    case JType::kLong:
    case JType::kShort:
    case JType::kByte:
    case JType::kChar:
    case JType::kFloat:
    case JType::kDouble:
      return true;
    default:
      return false;
  }
}

inline bool is_floating(JType t) {
  return t == JType::kFloat || t == JType::kDouble;
}

// Declared-type text -> JType ("java.lang.String" and "CharSequence" count
// as string; arrays and unrecognized class types are kUnknown).
JType type_from_text(std::string_view text);

class TypeInference {
 public:
  TypeInference(const SyntaxTree& tree, const ScopeAnalysis& scopes)
      : src_(tree.source()), scopes_(scopes) {}

  JType infer(const SyntaxNode* expr) const;

 private:
  std::string_view src_;
  const ScopeAnalysis& scopes_;
};

}  // namespace codemorph::internal
