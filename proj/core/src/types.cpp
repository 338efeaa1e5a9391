#include "types.hpp"

#include <cctype>
#include <string>

namespace codemorph::internal {

namespace {

// Strips annotations and generic arguments from a declared type.
std::string base_type_text(std::string_view text) {
  std::string out;
  int generic_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '@') {
      // skip annotation name
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_' || text[i] == '.'))
        ++i;
      --i;
      continue;
    }
    if (c == '<') { ++generic_depth; continue; }
    if (c == '>') { --generic_depth; continue; }
    if (generic_depth > 0) continue;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    out.push_back(c);
  }
  return out;
}

JType promote(JType a, JType b) {
  if (a == JType::kUnknown || b == JType::kUnknown) return JType::kUnknown;
  if (!is_numeric(a) || !is_numeric(b)) return JType::kUnknown;
  if (a == JType::kDouble || b == JType::kDouble) return JType::kDouble;
  if (a == JType::kFloat || b == JType::kFloat) return JType::kFloat;
  if (a == JType::kLong || b == JType::kLong) return JType::kLong;
  return JType::kInt;
}

}  // namespace

JType type_from_text(std::string_view text) {
  std::string base = base_type_text(text);
  if (base.find("[]") != std::string::npos) return JType::kUnknown;
  if (base == "int") return JType::kInt;
  if (base == "long") return JType::kLong;
  if (base == "short") return JType::kShort;
  if (base == "byte") return JType::kByte;
  if (base == "char") return JType::kChar;
  if (base == "float") return JType::kFloat;
  if (base == "double") return JType::kDouble;
  if (base == "boolean") return JType::kBoolean;
  if (base == "Integer") return JType::kInt;
  if (base == "Long") return JType::kLong;
  if (base == "Short") return JType::kShort;
  if (base == "Byte") return JType::kByte;
  if (base == "Character") return JType::kChar;
  if (base == "Float") return JType::kFloat;
  if (base == "Double") return JType::kDouble;
  if (base == "Boolean") return JType::kBoolean;
  if (base == "String" || base == "java.lang.String" || base == "CharSequence")
    return JType::kString;
  return JType::kUnknown;
}

JType TypeInference::infer(const SyntaxNode* expr) const {
  switch (expr->kind) {
    case NodeKind::kIntegerLiteral: {
      std::string_view t = expr->text(src_);
      if (!t.empty() && (t.back() == 'l' || t.back() == 'L')) return JType::kLong;
      return JType::kInt;
    }
    case NodeKind::kFloatingLiteral: {
      std::string_view t = expr->text(src_);
      if (!t.empty() && (t.back() == 'f' || t.back() == 'F')) return JType::kFloat;
      return JType::kDouble;
    }
    case NodeKind::kCharacterLiteral: return JType::kChar;
    case NodeKind::kStringLiteral:
    case NodeKind::kTextBlock: return JType::kString;
    case NodeKind::kBooleanLiteral: return JType::kBoolean;
    case NodeKind::kNullLiteral: return JType::kUnknown;

    case NodeKind::kIdentifier: {
      auto it = scopes_.usages.find(expr);
      if (it == scopes_.usages.end()) return JType::kUnknown;
      if (it->second->type_text.empty()) return JType::kUnknown;
      return type_from_text(it->second->type_text);
    }

    case NodeKind::kParenthesizedExpression:
      return expr->children.size() == 3 ? infer(expr->children[1]) : JType::kUnknown;

    case NodeKind::kUnaryExpression: {
      if (expr->children.size() != 2) return JType::kUnknown;
      std::string_view op = expr->children[0]->text(src_);
      JType t = infer(expr->children[1]);
      if (op == "!") return JType::kBoolean;
      if (op == "+" || op == "-" || op == "~") {
        if (!is_numeric(t)) return t == JType::kUnknown ? JType::kUnknown : t;
        // unary numeric promotion
        if (t == JType::kByte || t == JType::kShort || t == JType::kChar)
          return JType::kInt;
        return t;
      }
      return t;
    }
    case NodeKind::kPostfixExpression:
      return expr->children.empty() ? JType::kUnknown : infer(expr->children[0]);

    case NodeKind::kCastExpression: {
      const SyntaxNode* t = expr->first_child(NodeKind::kType);
      return t ? type_from_text(t->text(src_)) : JType::kUnknown;
    }

    case NodeKind::kArrayAccess: {
      if (expr->children.empty()) return JType::kUnknown;
      const SyntaxNode* base = expr->children[0];
      if (base->kind != NodeKind::kIdentifier) return JType::kUnknown;
      auto it = scopes_.usages.find(base);
      if (it == scopes_.usages.end() || it->second->type_text.empty())
        return JType::kUnknown;
      std::string t = base_type_text(it->second->type_text);
      auto pos = t.rfind("[]");
      if (pos == std::string::npos || pos + 2 != t.size()) return JType::kUnknown;
      return type_from_text(t.substr(0, pos));
    }

    case NodeKind::kObjectCreation: {
      const SyntaxNode* t = expr->first_child(NodeKind::kType);
      return t ? type_from_text(t->text(src_)) : JType::kUnknown;
    }

    case NodeKind::kBinaryExpression: {
      if (expr->children.size() != 3) return JType::kUnknown;
      std::string_view op = expr->children[1]->text(src_);
      JType l = infer(expr->children[0]);
      JType r = infer(expr->children[2]);
      if (op == "+" && (l == JType::kString || r == JType::kString))
        return JType::kString;
      if (op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" ||
          op == "&&" || op == "||")
        return JType::kBoolean;
      if (op == "+" || op == "-" || op == "*" || op == "/" || op == "%")
        return promote(l, r);
      if (op == "&" || op == "|" || op == "^") {
        if (l == JType::kBoolean && r == JType::kBoolean) return JType::kBoolean;
        return promote(l, r);
      }
      if (op == "<<") return l;
      return JType::kUnknown;
    }

    case NodeKind::kConditionalExpression: {
      if (expr->children.size() != 5) return JType::kUnknown;
      JType a = infer(expr->children[2]);
      JType b = infer(expr->children[4]);
      if (a == b) return a;
      if (is_numeric(a) && is_numeric(b)) return promote(a, b);
      return JType::kUnknown;
    }

    case NodeKind::kInstanceofExpression: return JType::kBoolean;

    default:
      return JType::kUnknown;
  }
}

}  // namespace codemorph::internal
