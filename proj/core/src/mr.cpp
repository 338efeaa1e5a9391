#include "codemorph/mr.hpp"

#include <algorithm>

#include "codemorph/edits.hpp"
#include "codemorph/errors.hpp"
#include "codemorph/lexer.hpp"
#include "mr_internal.hpp"

namespace codemorph {

std::string mr_code(MrId id) {
  return "m" + std::to_string(static_cast<int>(id));
}

std::string_view mr_name(MrId id) {
  switch (id) {
    case MrId::kVariableRenaming: return "VariableRenaming";
    case MrId::kMethodRenaming: return "MethodRenaming";
    case MrId::kAssignExpression: return "AssignExpression";
    case MrId::kConditionalExpression: return "ConditionalExpression";
    case MrId::kBinaryExpression: return "BinaryExpression";
    case MrId::kDummyVariable: return "DummyVariable";
    case MrId::kAddingComments: return "AddingComments";
    case MrId::kVariableDeclaration: return "VariableDeclaration";
    case MrId::kForToWhileLoop: return "ForToWhileLoop";
  }
  return "";
}

std::optional<MrId> mr_from_code(std::string_view code) {
  if (code.size() == 2 && code[0] == 'm' && code[1] >= '1' && code[1] <= '9') {
    return static_cast<MrId>(code[1] - '0');
  }
  for (MrId id : all_mrs()) {
    if (mr_name(id) == code) return id;
  }
  return std::nullopt;
}

std::vector<MrId> all_mrs() {
  std::vector<MrId> out;
  out.reserve(kMrCount);
  for (int i = 1; i <= kMrCount; ++i) out.push_back(static_cast<MrId>(i));
  return out;
}

void RenameMap::merge(const RenameMap& other) {
  variables.insert(variables.end(), other.variables.begin(), other.variables.end());
  methods.insert(methods.end(), other.methods.begin(), other.methods.end());
}

std::vector<RenameEntry> RenameMap::inverse() const {
  std::vector<RenameEntry> out;
  out.reserve(variables.size() + methods.size());
  for (const RenameEntry& e : variables)
    out.push_back(RenameEntry{e.new_name, e.old_name});
  for (const RenameEntry& e : methods)
    out.push_back(RenameEntry{e.new_name, e.old_name});
  return out;
}

MrOutcome apply_mr(MrId id, const std::string& source, MrContext& ctx) {
  switch (id) {
    case MrId::kVariableRenaming: return mr1_variable_renaming(source, ctx);
    case MrId::kMethodRenaming: return mr2_method_renaming(source, ctx);
    case MrId::kAssignExpression: return mr3_assign_expression(source, ctx);
    case MrId::kConditionalExpression: return mr4_conditional_expression(source, ctx);
    case MrId::kBinaryExpression: return mr5_binary_expression(source, ctx);
    case MrId::kDummyVariable: return mr6_dummy_variable(source, ctx);
    case MrId::kAddingComments: return mr7_adding_comments(source, ctx);
    case MrId::kVariableDeclaration: return mr8_variable_declaration(source, ctx);
    case MrId::kForToWhileLoop: return mr9_for_to_while(source, ctx);
  }
  throw RangeError("invalid MrId");
}

namespace internal {

UnitView make_unit(const std::string& source) {
  UnitView unit;
  unit.source = source;
  unit.tree = parse_java(source);
  for (const Token& t : lex_java(unit.source)) {
    if (t.kind == TokenKind::kIdentifier) {
      unit.identifiers.insert(std::string(slice(unit.source, t.span)));
    }
  }
  return unit;
}

MrOutcome finish(const UnitView& unit, std::vector<TextEdit> edits,
                 RenameMap rename_map) {
  // Drop edits that would not change their span's text.
  edits.erase(std::remove_if(edits.begin(), edits.end(),
                             [&](const TextEdit& e) {
                               return e.replacement ==
                                      std::string(slice(unit.source, e.span));
                             }),
              edits.end());
  MrOutcome out;
  out.text = apply_edits(unit.source, edits);
  out.applied = text_differs(unit.source, out.text);
  out.edits_count = out.applied ? static_cast<int>(edits.size()) : 0;
  out.rename_map = std::move(rename_map);
  if (!out.applied) out.rename_map = RenameMap{};
  return out;
}

bool side_effect_free(const SyntaxNode* n, std::string_view src) {
  switch (n->kind) {
    case NodeKind::kIdentifier:
    case NodeKind::kIntegerLiteral:
    case NodeKind::kFloatingLiteral:
    case NodeKind::kCharacterLiteral:
    case NodeKind::kStringLiteral:
    case NodeKind::kTextBlock:
    case NodeKind::kBooleanLiteral:
    case NodeKind::kNullLiteral:
    case NodeKind::kClassLiteral:
      return true;
    case NodeKind::kKeyword: {
      std::string_view t = n->text(src);
      return t == "this" || t == "super";
    }
    case NodeKind::kOperatorToken:
    case NodeKind::kType:
      return true;  // structural children of a larger expression
    case NodeKind::kFieldAccess:
    case NodeKind::kArrayAccess:
    case NodeKind::kParenthesizedExpression:
    case NodeKind::kBinaryExpression:
    case NodeKind::kInstanceofExpression:
    case NodeKind::kConditionalExpression:
    case NodeKind::kCastExpression: {
      for (const SyntaxNode* c : n->children) {
        if (!side_effect_free(c, src)) return false;
      }
      return true;
    }
    case NodeKind::kUnaryExpression: {
      if (n->children.size() != 2) return false;
      std::string_view op = n->children[0]->text(src);
      if (op == "++" || op == "--") return false;
      return side_effect_free(n->children[1], src);
    }
    default:
      return false;
  }
}

std::string fresh_name(const std::string& base, const std::string& infix,
                       int& counter, const std::unordered_set<std::string>& taken,
                       std::unordered_set<std::string>& assigned) {
  while (true) {
    std::string candidate = base + infix + std::to_string(counter);
    ++counter;
    if (taken.count(candidate) == 0 && assigned.count(candidate) == 0) {
      assigned.insert(candidate);
      return candidate;
    }
  }
}

}  // namespace internal

}  // namespace codemorph
