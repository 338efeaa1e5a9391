#pragma once

#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codemorph/lexer.hpp"
#include "codemorph/span.hpp"

namespace codemorph {

enum class NodeKind {
  // containers
  kSourceFragment,
  kCompilationUnit,
  kPackageDeclaration,
  kImportDeclaration,
  kClassDeclaration,
  kInterfaceDeclaration,
  kEnumDeclaration,
  kRecordDeclaration,
  kAnnotationDeclaration,
  kClassBody,
  kEnumConstant,
  kFieldDeclaration,
  kMethodDeclaration,
  kConstructorDeclaration,
  kInitializerBlock,
  kAnnotation,
  kTypeParameters,
  kFormalParameters,
  kFormalParameter,
  kLambdaParameter,
  kThrowsClause,
  kType,
  // statements
  kBlock,
  kLocalVariableDeclaration,
  kVariableDeclarator,
  kExpressionStatement,
  kIfStatement,
  kWhileStatement,
  kDoStatement,
  kForStatement,
  kEnhancedForStatement,
  kSwitchStatement,
  kSwitchBlock,
  kSwitchLabel,
  kReturnStatement,
  kThrowStatement,
  kTryStatement,
  kResourceList,
  kCatchClause,
  kFinallyClause,
  kBreakStatement,
  kContinueStatement,
  kLabeledStatement,
  kSynchronizedStatement,
  kAssertStatement,
  kEmptyStatement,
  // expressions
  kAssignmentExpression,
  kConditionalExpression,
  kBinaryExpression,
  kInstanceofExpression,
  kUnaryExpression,
  kPostfixExpression,
  kCastExpression,
  kParenthesizedExpression,
  kMethodInvocation,
  kFieldAccess,
  kArrayAccess,
  kObjectCreation,
  kArrayCreation,
  kArrayInitializer,
  kLambdaExpression,
  kMethodReference,
  kClassLiteral,
  kArgumentList,
  // leaves
  kIdentifier,
  kKeyword,
  kOperatorToken,
  kIntegerLiteral,
  kFloatingLiteral,
  kCharacterLiteral,
  kStringLiteral,
  kTextBlock,
  kBooleanLiteral,
  kNullLiteral,
  // recovery
  kError,
};

std::string_view kind_name(NodeKind kind);
std::optional<NodeKind> kind_from_name(std::string_view name);

struct SyntaxNode {
  NodeKind kind = NodeKind::kError;
  Span span;
  const SyntaxNode* parent = nullptr;
  std::vector<SyntaxNode*> children;

  bool is_leaf() const { return children.empty() && leaf; }
  bool leaf = false;

  std::string_view text(std::string_view source) const {
    return slice(source, span);
  }

  const SyntaxNode* first_child(NodeKind k) const {
    for (const SyntaxNode* c : children)
      if (c->kind == k) return c;
    return nullptr;
  }

  // First leaf child whose text equals `tok`.
  const SyntaxNode* child_token(std::string_view source, std::string_view tok) const {
    for (const SyntaxNode* c : children)
      if (c->leaf && c->text(source) == tok) return c;
    return nullptr;
  }

  bool is_literal() const {
    switch (kind) {
      case NodeKind::kIntegerLiteral:
      case NodeKind::kFloatingLiteral:
      case NodeKind::kCharacterLiteral:
      case NodeKind::kStringLiteral:
      case NodeKind::kTextBlock:
      case NodeKind::kBooleanLiteral:
      case NodeKind::kNullLiteral:
        return true;
      default:
        return false;
    }
  }
};

// Concrete syntax tree over an immutable source. Node spans are byte
// ranges into source(); sibling spans are ordered and non-overlapping,
// child spans nest inside their parent.
class SyntaxTree {
 public:
  SyntaxTree() = default;
  SyntaxTree(SyntaxTree&&) = default;
  SyntaxTree& operator=(SyntaxTree&&) = default;
  SyntaxTree(const SyntaxTree&) = delete;
  SyntaxTree& operator=(const SyntaxTree&) = delete;

  const SyntaxNode& root() const { return *root_; }
  const std::string& source() const { return source_; }
  bool wrapped() const { return wrapped_; }

  // Reconstructs the source from leaf tokens plus inter-token trivia.
  // Equal to source() for any tree built by parse_java.
  std::string render() const;

  bool has_error_nodes() const;

  // Parser internals; arena-allocates one node.
  SyntaxNode* make(NodeKind kind);

 private:
  friend class Parser;
  friend SyntaxTree parse_java(std::string source);

  std::string source_;
  bool wrapped_ = false;
  SyntaxNode* root_ = nullptr;
  std::deque<SyntaxNode> arena_;
};

// Parses Java source. Accepts a compilation unit, a class fragment
// (members without an enclosing class) or a bare method; fragments are
// parsed inside a synthetic wrapper class and exposed with spans in the
// original coordinates under a source_fragment root. Unparsable regions
// become error nodes. Throws ParseFatal when the input is empty after
// trimming.
SyntaxTree parse_java(std::string source);

// All nodes of the given kind in document order (sorted by span.start,
// no duplicates).
std::vector<const SyntaxNode*> find_nodes(const SyntaxTree& tree, NodeKind kind);
std::vector<const SyntaxNode*> find_nodes(const SyntaxTree& tree,
                                          std::string_view kind);

// Document-order preorder walk.
template <typename Fn>
void walk(const SyntaxNode& node, Fn&& fn) {
  fn(node);
  for (const SyntaxNode* c : node.children) walk(*c, fn);
}

}  // namespace codemorph
