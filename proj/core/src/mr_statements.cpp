// MR3 AssignExpression, MR4 ConditionalExpression, MR5 BinaryExpression:
// statement-level rewrites of assignment and binary/conditional operators.

#include <string>

#include "codemorph/lexer.hpp"
#include "codemorph/mr.hpp"
#include "mr_internal.hpp"
#include "scopes.hpp"
#include "types.hpp"

namespace codemorph {

using internal::JType;
using internal::UnitView;

namespace {

// Binary expression with exactly [left, op, right].
bool simple_binary(const SyntaxNode* n, std::string_view src,
                   const SyntaxNode** left, std::string_view* op,
                   const SyntaxNode** right) {
  if (n->kind != NodeKind::kBinaryExpression || n->children.size() != 3)
    return false;
  *left = n->children[0];
  *op = n->children[1]->text(src);
  *right = n->children[2];
  return true;
}

bool token_equal(const SyntaxNode* a, const SyntaxNode* b, std::string_view src) {
  return tokens_identical(a->text(src), b->text(src));
}

// Assignable without re-evaluation hazards: plain name, field access or
// array access built from side-effect-free parts.
bool simple_target(const SyntaxNode* n, std::string_view src) {
  switch (n->kind) {
    case NodeKind::kIdentifier:
      return true;
    case NodeKind::kFieldAccess:
    case NodeKind::kArrayAccess:
      return internal::side_effect_free(n, src);
    default:
      return false;
  }
}

}  // namespace

MrOutcome mr3_assign_expression(const std::string& source, MrContext& ctx) {
  (void)ctx;
  UnitView unit = internal::make_unit(source);
  std::string_view src = unit.source;
  internal::ScopeAnalysis scopes = internal::analyze_scopes(unit.tree);
  internal::TypeInference types(unit.tree, scopes);

  std::vector<TextEdit> edits;
  for (const SyntaxNode* assign :
       find_nodes(unit.tree, NodeKind::kAssignmentExpression)) {
    if (assign->children.size() != 3) continue;
    const SyntaxNode* target = assign->children[0];
    if (assign->children[1]->text(src) != "=") continue;
    const SyntaxNode* value = assign->children[2];

    const SyntaxNode *a, *b;
    std::string_view op;
    if (!simple_binary(value, src, &a, &op, &b)) continue;
    if (op != "+" && op != "-" && op != "*" && op != "/") continue;
    if (!simple_target(target, src)) continue;
    if (types.infer(target) == JType::kString) continue;
    if (types.infer(a) == JType::kString || types.infer(b) == JType::kString)
      continue;

    std::string target_text(target->text(src));
    std::string replacement;
    if (token_equal(a, target, src)) {
      replacement = target_text + " " + std::string(op) + "= " +
                    std::string(b->text(src));
    } else if (token_equal(b, target, src) && (op == "+" || op == "*") &&
               internal::side_effect_free(a, src)) {
      replacement = target_text + " " + std::string(op) + "= " +
                    std::string(a->text(src));
    } else {
      continue;
    }
    edits.push_back(TextEdit{assign->span, std::move(replacement)});
  }
  return internal::finish(unit, std::move(edits));
}

namespace {

class Mr4Rewriter : public internal::Rewriter {
 public:
  explicit Mr4Rewriter(std::string_view src) : Rewriter(src) {}

 protected:
  bool transform(const SyntaxNode* n, std::string& out) override {
    const SyntaxNode *a, *b;
    std::string_view op;
    if (!simple_binary(n, src_, &a, &op, &b)) return false;

    if (op == "<" || op == ">") {
      if (!internal::side_effect_free(a, src_) ||
          !internal::side_effect_free(b, src_))
        return false;
      std::string ra = render(a);
      std::string rb = render(b);
      if (ra == rb) return false;  // a < a swaps to itself
      out = rb + (op == ">" ? " < " : " > ") + ra;
      return true;
    }
    if (op == "&&" || op == "||") {
      if (n->parent && n->parent->kind == NodeKind::kParenthesizedExpression)
        return false;  // already parenthesized
      out = "(" + render_children(n) + ")";
      return true;
    }
    return false;
  }
};

class Mr5Rewriter : public internal::Rewriter {
 public:
  Mr5Rewriter(std::string_view src, const internal::TypeInference& types)
      : Rewriter(src), types_(types) {}

 protected:
  bool transform(const SyntaxNode* n, std::string& out) override {
    const SyntaxNode *a, *b;
    std::string_view op;
    if (!simple_binary(n, src_, &a, &op, &b)) return false;

    JType ta = types_.infer(a);
    JType tb = types_.infer(b);

    if (op == "+" || op == "*") {
      if (!internal::side_effect_free(a, src_) ||
          !internal::side_effect_free(b, src_))
        return false;
      if (op == "+") {
        // String concatenation is order-sensitive; skip unless both sides
        // are known numeric.
        if (!internal::is_numeric(ta) || !internal::is_numeric(tb)) return false;
      } else {
        if (ta == JType::kString || tb == JType::kString) return false;
      }
      std::string ra = render(a);
      std::string rb = render(b);
      if (ra == rb) return false;
      out = rb + " " + std::string(op) + " " + ra;
      return true;
    }

    if (op == "-") {
      if (ta == JType::kString || tb == JType::kString) return false;
      if (ta == JType::kBoolean || tb == JType::kBoolean) return false;
      std::string rb = render(b);
      out = render(a) + " + " + negated(b, rb);
      return true;
    }

    if (op == "/") {
      // a * (1.0 / b) only when the division is provably floating; the
      // rewrite is value-changing for integral division.
      if (!internal::is_floating(ta) && !internal::is_floating(tb)) return false;
      std::string rb = render(b);
      if (!simple_operand(b)) rb = "(" + rb + ")";
      out = render(a) + " * (1.0 / " + rb + ")";
      return true;
    }
    return false;
  }

 private:
  static bool simple_operand(const SyntaxNode* n) {
    switch (n->kind) {
      case NodeKind::kIdentifier:
      case NodeKind::kIntegerLiteral:
      case NodeKind::kFloatingLiteral:
      case NodeKind::kCharacterLiteral:
      case NodeKind::kParenthesizedExpression:
      case NodeKind::kFieldAccess:
      case NodeKind::kArrayAccess:
      case NodeKind::kMethodInvocation:
        return true;
      default:
        return false;
    }
  }

  std::string negated(const SyntaxNode* b, const std::string& rb) const {
    if (!simple_operand(b)) return "(-(" + rb + "))";
    if (!rb.empty() && (rb[0] == '-' || rb[0] == '+')) return "(- " + rb + ")";
    return "(-" + rb + ")";
  }

  const internal::TypeInference& types_;
};

}  // namespace

MrOutcome mr4_conditional_expression(const std::string& source, MrContext& ctx) {
  (void)ctx;
  UnitView unit = internal::make_unit(source);
  Mr4Rewriter rewriter(unit.source);
  std::vector<TextEdit> edits;
  rewriter.emit(&unit.tree.root(), edits);
  return internal::finish(unit, std::move(edits));
}

MrOutcome mr5_binary_expression(const std::string& source, MrContext& ctx) {
  (void)ctx;
  UnitView unit = internal::make_unit(source);
  internal::ScopeAnalysis scopes = internal::analyze_scopes(unit.tree);
  internal::TypeInference types(unit.tree, scopes);
  Mr5Rewriter rewriter(unit.source, types);
  std::vector<TextEdit> edits;
  rewriter.emit(&unit.tree.root(), edits);
  return internal::finish(unit, std::move(edits));
}

}  // namespace codemorph
