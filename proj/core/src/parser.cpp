#include "codemorph/parser.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "codemorph/errors.hpp"

namespace codemorph {

namespace {

constexpr std::string_view kWrapPrefix = "class __Wrap__ {\n";
constexpr std::string_view kWrapSuffix = "\n}\n";

const std::unordered_map<std::string_view, NodeKind>& name_table() {
  static const std::unordered_map<std::string_view, NodeKind> table = [] {
    std::unordered_map<std::string_view, NodeKind> t;
    for (int k = 0; k <= static_cast<int>(NodeKind::kError); ++k) {
      NodeKind kind = static_cast<NodeKind>(k);
      t.emplace(kind_name(kind), kind);
    }
    return t;
  }();
  return table;
}

bool is_modifier_word(std::string_view w) {
  return w == "public" || w == "protected" || w == "private" || w == "static" ||
         w == "abstract" || w == "final" || w == "native" || w == "synchronized" ||
         w == "transient" || w == "volatile" || w == "strictfp" || w == "default";
}

bool is_primitive_word(std::string_view w) {
  return w == "boolean" || w == "byte" || w == "short" || w == "char" ||
         w == "int" || w == "long" || w == "float" || w == "double" || w == "void";
}

}  // namespace

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kSourceFragment: return "source_fragment";
    case NodeKind::kCompilationUnit: return "compilation_unit";
    case NodeKind::kPackageDeclaration: return "package_declaration";
    case NodeKind::kImportDeclaration: return "import_declaration";
    case NodeKind::kClassDeclaration: return "class_declaration";
    case NodeKind::kInterfaceDeclaration: return "interface_declaration";
    case NodeKind::kEnumDeclaration: return "enum_declaration";
    case NodeKind::kRecordDeclaration: return "record_declaration";
    case NodeKind::kAnnotationDeclaration: return "annotation_declaration";
    case NodeKind::kClassBody: return "class_body";
    case NodeKind::kEnumConstant: return "enum_constant";
    case NodeKind::kFieldDeclaration: return "field_declaration";
    case NodeKind::kMethodDeclaration: return "method_declaration";
    case NodeKind::kConstructorDeclaration: return "constructor_declaration";
    case NodeKind::kInitializerBlock: return "initializer_block";
    case NodeKind::kAnnotation: return "annotation";
    case NodeKind::kTypeParameters: return "type_parameters";
    case NodeKind::kFormalParameters: return "formal_parameters";
    case NodeKind::kFormalParameter: return "formal_parameter";
    case NodeKind::kLambdaParameter: return "lambda_parameter";
    case NodeKind::kThrowsClause: return "throws_clause";
    case NodeKind::kType: return "type";
    case NodeKind::kBlock: return "block";
    case NodeKind::kLocalVariableDeclaration: return "local_variable_declaration";
    case NodeKind::kVariableDeclarator: return "variable_declarator";
    case NodeKind::kExpressionStatement: return "expression_statement";
    case NodeKind::kIfStatement: return "if_statement";
    case NodeKind::kWhileStatement: return "while_statement";
    case NodeKind::kDoStatement: return "do_statement";
    case NodeKind::kForStatement: return "for_statement";
    case NodeKind::kEnhancedForStatement: return "enhanced_for_statement";
    case NodeKind::kSwitchStatement: return "switch_statement";
    case NodeKind::kSwitchBlock: return "switch_block";
    case NodeKind::kSwitchLabel: return "switch_label";
    case NodeKind::kReturnStatement: return "return_statement";
    case NodeKind::kThrowStatement: return "throw_statement";
    case NodeKind::kTryStatement: return "try_statement";
    case NodeKind::kResourceList: return "resource_list";
    case NodeKind::kCatchClause: return "catch_clause";
    case NodeKind::kFinallyClause: return "finally_clause";
    case NodeKind::kBreakStatement: return "break_statement";
    case NodeKind::kContinueStatement: return "continue_statement";
    case NodeKind::kLabeledStatement: return "labeled_statement";
    case NodeKind::kSynchronizedStatement: return "synchronized_statement";
    case NodeKind::kAssertStatement: return "assert_statement";
    case NodeKind::kEmptyStatement: return "empty_statement";
    case NodeKind::kAssignmentExpression: return "assignment_expression";
    case NodeKind::kConditionalExpression: return "conditional_expression";
    case NodeKind::kBinaryExpression: return "binary_expression";
    case NodeKind::kInstanceofExpression: return "instanceof_expression";
    case NodeKind::kUnaryExpression: return "unary_expression";
    case NodeKind::kPostfixExpression: return "postfix_expression";
    case NodeKind::kCastExpression: return "cast_expression";
    case NodeKind::kParenthesizedExpression: return "parenthesized_expression";
    case NodeKind::kMethodInvocation: return "method_invocation";
    case NodeKind::kFieldAccess: return "field_access";
    case NodeKind::kArrayAccess: return "array_access";
    case NodeKind::kObjectCreation: return "object_creation";
    case NodeKind::kArrayCreation: return "array_creation";
    case NodeKind::kArrayInitializer: return "array_initializer";
    case NodeKind::kLambdaExpression: return "lambda_expression";
    case NodeKind::kMethodReference: return "method_reference";
    case NodeKind::kClassLiteral: return "class_literal";
    case NodeKind::kArgumentList: return "argument_list";
    case NodeKind::kIdentifier: return "identifier";
    case NodeKind::kKeyword: return "keyword";
    case NodeKind::kOperatorToken: return "operator";
    case NodeKind::kIntegerLiteral: return "integer_literal";
    case NodeKind::kFloatingLiteral: return "floating_literal";
    case NodeKind::kCharacterLiteral: return "character_literal";
    case NodeKind::kStringLiteral: return "string_literal";
    case NodeKind::kTextBlock: return "text_block";
    case NodeKind::kBooleanLiteral: return "boolean_literal";
    case NodeKind::kNullLiteral: return "null_literal";
    case NodeKind::kError: return "error";
  }
  return "error";
}

std::optional<NodeKind> kind_from_name(std::string_view name) {
  auto it = name_table().find(name);
  if (it == name_table().end()) return std::nullopt;
  return it->second;
}

SyntaxNode* SyntaxTree::make(NodeKind kind) {
  arena_.emplace_back();
  arena_.back().kind = kind;
  return &arena_.back();
}

std::string SyntaxTree::render() const {
  std::string out;
  out.reserve(source_.size());
  std::size_t cursor = 0;
  walk(*root_, [&](const SyntaxNode& n) {
    if (!n.leaf) return;
    if (n.span.start > cursor) {
      out.append(source_, cursor, n.span.start - cursor);
    }
    out.append(source_, n.span.start, n.span.end - n.span.start);
    cursor = n.span.end;
  });
  if (cursor < source_.size()) out.append(source_, cursor, std::string::npos);
  return out;
}

bool SyntaxTree::has_error_nodes() const {
  bool found = false;
  walk(*root_, [&](const SyntaxNode& n) {
    if (n.kind == NodeKind::kError) found = true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  Parser(SyntaxTree& tree, std::string_view src)
      : tree_(tree), src_(src) {
    for (const Token& t : lex_java(src)) {
      if (!is_trivia(t.kind) && t.kind != TokenKind::kError) toks_.push_back(t);
    }
  }

  SyntaxNode* parse_compilation_unit() {
    std::vector<SyntaxNode*> children;
    if (is("package")) {
      std::vector<SyntaxNode*> c{leaf()};
      consume_until_semi(c);
      children.push_back(node(NodeKind::kPackageDeclaration, std::move(c)));
    }
    while (is("import")) {
      std::vector<SyntaxNode*> c{leaf()};
      consume_until_semi(c);
      children.push_back(node(NodeKind::kImportDeclaration, std::move(c)));
    }
    while (!at_end()) {
      if (is(";")) {
        children.push_back(leaf());
        continue;
      }
      SyntaxNode* decl = parse_type_declaration();
      if (decl) {
        children.push_back(decl);
      } else {
        children.push_back(recover(/*stop_at_close_brace=*/false));
      }
    }
    return node(NodeKind::kCompilationUnit, std::move(children));
  }

  bool all_consumed() const { return pos_ == toks_.size(); }

 private:
  // -- token primitives ------------------------------------------------

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token& peek(std::size_t k = 0) const {
    static Token eof{TokenKind::kError, Span{0, 0}};
    return pos_ + k < toks_.size() ? toks_[pos_ + k] : eof;
  }

  std::string_view text(std::size_t k = 0) const {
    if (pos_ + k >= toks_.size()) return {};
    return slice(src_, toks_[pos_ + k].span);
  }

  bool is(std::string_view t, std::size_t k = 0) const { return text(k) == t; }

  bool is_kind(TokenKind k, std::size_t off = 0) const {
    return pos_ + off < toks_.size() && toks_[pos_ + off].kind == k;
  }

  // True when tokens k and k+1 touch with no trivia between them.
  bool adjacent(std::size_t k = 0) const {
    return pos_ + k + 1 < toks_.size() &&
           toks_[pos_ + k].span.end == toks_[pos_ + k + 1].span.start;
  }

  SyntaxNode* leaf() {
    assert(!at_end());
    const Token& t = toks_[pos_++];
    SyntaxNode* n = tree_.make(leaf_kind(t));
    n->span = t.span;
    n->leaf = true;
    return n;
  }

  NodeKind leaf_kind(const Token& t) const {
    switch (t.kind) {
      case TokenKind::kIdentifier: return NodeKind::kIdentifier;
      case TokenKind::kKeyword: {
        std::string_view w = slice(src_, t.span);
        if (w == "true" || w == "false") return NodeKind::kBooleanLiteral;
        if (w == "null") return NodeKind::kNullLiteral;
        return NodeKind::kKeyword;
      }
      case TokenKind::kIntLiteral: return NodeKind::kIntegerLiteral;
      case TokenKind::kFloatLiteral: return NodeKind::kFloatingLiteral;
      case TokenKind::kCharLiteral: return NodeKind::kCharacterLiteral;
      case TokenKind::kStringLiteral: return NodeKind::kStringLiteral;
      case TokenKind::kTextBlock: return NodeKind::kTextBlock;
      default: return NodeKind::kOperatorToken;
    }
  }

  bool accept(std::string_view t, std::vector<SyntaxNode*>& into) {
    if (!is(t)) return false;
    into.push_back(leaf());
    return true;
  }

  SyntaxNode* node(NodeKind kind, std::vector<SyntaxNode*> children) {
    SyntaxNode* n = tree_.make(kind);
    if (!children.empty()) {
      n->span = Span{children.front()->span.start, children.back()->span.end};
    }
    n->children = std::move(children);
    for (SyntaxNode* c : n->children) c->parent = n;
    return n;
  }

  // Consumes tokens (balancing braces) until after ';' or before '}'.
  void consume_until_semi(std::vector<SyntaxNode*>& into) {
    int depth = 0;
    while (!at_end()) {
      if (is("{")) ++depth;
      if (is("}")) {
        if (depth == 0) return;
        --depth;
      }
      bool was_semi = is(";") && depth == 0;
      into.push_back(leaf());
      if (was_semi) return;
    }
  }

  // Error recovery: swallow tokens into an error node until a statement or
  // member boundary. Always makes progress.
  SyntaxNode* recover(bool stop_at_close_brace = true) {
    std::vector<SyntaxNode*> c;
    int depth = 0;
    while (!at_end()) {
      if (is("}") && depth == 0) {
        if (stop_at_close_brace) break;
        c.push_back(leaf());  // stray brace at top level
        continue;
      }
      if (is("{")) ++depth;
      else if (is("}")) --depth;
      bool was_semi = is(";") && depth == 0;
      c.push_back(leaf());
      if (was_semi) break;
    }
    if (c.empty() && !at_end()) c.push_back(leaf());
    return node(NodeKind::kError, std::move(c));
  }

  // -- modifiers, annotations, types ------------------------------------

  SyntaxNode* parse_annotation() {
    // '@' name ('.' name)* ['(' raw balanced ')']
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // '@'
    if (is_kind(TokenKind::kIdentifier) || is("interface")) c.push_back(leaf());
    while (is(".") && is_kind(TokenKind::kIdentifier, 1)) {
      c.push_back(leaf());
      c.push_back(leaf());
    }
    if (is("(")) {
      int depth = 0;
      do {
        if (is("(")) ++depth;
        else if (is(")")) --depth;
        c.push_back(leaf());
      } while (!at_end() && depth > 0);
    }
    return node(NodeKind::kAnnotation, std::move(c));
  }

  void parse_modifiers(std::vector<SyntaxNode*>& into) {
    while (!at_end()) {
      if (is("@") && !is("interface", 1)) {
        into.push_back(parse_annotation());
      } else if (is_kind(TokenKind::kKeyword) && is_modifier_word(text())) {
        into.push_back(leaf());
      } else {
        return;
      }
    }
  }

  // Speculative type parse; returns nullptr (position restored) on failure.
  SyntaxNode* try_parse_type() {
    std::size_t save = pos_;
    std::vector<SyntaxNode*> c;
    while (is("@") && !is("interface", 1)) c.push_back(parse_annotation());
    if (is_kind(TokenKind::kKeyword) && is_primitive_word(text())) {
      c.push_back(leaf());
    } else if (is_kind(TokenKind::kIdentifier)) {
      c.push_back(leaf());
      if (!parse_type_suffix(c)) {
        pos_ = save;
        return nullptr;
      }
    } else {
      pos_ = save;
      return nullptr;
    }
    // array dims
    while (is("[") && is("]", 1)) {
      c.push_back(leaf());
      c.push_back(leaf());
    }
    // varargs handled by callers
    return node(NodeKind::kType, std::move(c));
  }

  // Parses optional <typeargs> and .Name<...> chains after a name.
  bool parse_type_suffix(std::vector<SyntaxNode*>& c) {
    if (is("<") && !parse_type_arguments(c)) return false;
    while (is(".") && is_kind(TokenKind::kIdentifier, 1)) {
      c.push_back(leaf());
      c.push_back(leaf());
      if (is("<") && !parse_type_arguments(c)) return false;
    }
    return true;
  }

  bool parse_type_arguments(std::vector<SyntaxNode*>& c) {
    // '<' already current
    c.push_back(leaf());
    if (is(">")) {  // diamond
      c.push_back(leaf());
      return true;
    }
    while (!at_end()) {
      if (is("?")) {
        c.push_back(leaf());
        if (is("extends") || is("super")) {
          c.push_back(leaf());
          SyntaxNode* t = try_parse_type();
          if (!t) return false;
          c.push_back(t);
        }
      } else {
        SyntaxNode* t = try_parse_type();
        if (!t) return false;
        c.push_back(t);
      }
      if (is(",")) {
        c.push_back(leaf());
        continue;
      }
      if (is(">")) {
        c.push_back(leaf());
        return true;
      }
      return false;
    }
    return false;
  }

  SyntaxNode* parse_type_parameters() {
    // generic declaration params: consume raw balanced <...>
    std::vector<SyntaxNode*> c;
    int depth = 0;
    do {
      if (is("<")) ++depth;
      else if (is(">")) --depth;
      c.push_back(leaf());
    } while (!at_end() && depth > 0);
    return node(NodeKind::kTypeParameters, std::move(c));
  }

  // -- declarations ------------------------------------------------------

  SyntaxNode* parse_type_declaration() {
    std::size_t save = pos_;
    std::vector<SyntaxNode*> c;
    parse_modifiers(c);
    if (is("class")) return parse_class_like(NodeKind::kClassDeclaration, std::move(c));
    if (is("interface")) return parse_class_like(NodeKind::kInterfaceDeclaration, std::move(c));
    if (is("enum")) return parse_enum(std::move(c));
    if (is("@") && is("interface", 1)) {
      c.push_back(leaf());
      return parse_class_like(NodeKind::kAnnotationDeclaration, std::move(c));
    }
    if (is("record") && is_kind(TokenKind::kIdentifier) &&
        is_kind(TokenKind::kIdentifier, 1) && is("(", 2)) {
      return parse_record(std::move(c));
    }
    pos_ = save;
    return nullptr;
  }

  SyntaxNode* parse_class_like(NodeKind kind, std::vector<SyntaxNode*> c) {
    c.push_back(leaf());  // class / interface / 'interface' after '@'
    if (is_kind(TokenKind::kIdentifier)) c.push_back(leaf());
    if (is("<")) c.push_back(parse_type_parameters());
    while (is("extends") || is("implements") || is("permits") ) {
      c.push_back(leaf());
      while (!at_end() && !is("{") && !is("extends") && !is("implements") &&
             !is("permits")) {
        SyntaxNode* t = try_parse_type();
        if (t) c.push_back(t);
        else c.push_back(leaf());
        if (is(",")) c.push_back(leaf());
        else break;
      }
    }
    if (is("{")) c.push_back(parse_class_body());
    return node(kind, std::move(c));
  }

  SyntaxNode* parse_record(std::vector<SyntaxNode*> c) {
    c.push_back(leaf());  // 'record' identifier token
    c.push_back(leaf());  // name
    if (is("<")) c.push_back(parse_type_parameters());
    if (is("(")) c.push_back(parse_formal_parameters());
    if (is("implements")) {
      c.push_back(leaf());
      SyntaxNode* t = try_parse_type();
      if (t) c.push_back(t);
      while (is(",")) {
        c.push_back(leaf());
        t = try_parse_type();
        if (t) c.push_back(t);
        else break;
      }
    }
    if (is("{")) c.push_back(parse_class_body());
    return node(NodeKind::kRecordDeclaration, std::move(c));
  }

  SyntaxNode* parse_enum(std::vector<SyntaxNode*> c) {
    c.push_back(leaf());  // enum
    if (is_kind(TokenKind::kIdentifier)) c.push_back(leaf());
    if (is("implements")) {
      c.push_back(leaf());
      SyntaxNode* t = try_parse_type();
      if (t) c.push_back(t);
      while (is(",")) {
        c.push_back(leaf());
        t = try_parse_type();
        if (t) c.push_back(t);
        else break;
      }
    }
    if (!is("{")) return node(NodeKind::kEnumDeclaration, std::move(c));
    std::vector<SyntaxNode*> body;
    body.push_back(leaf());  // {
    // constants until ';' or '}'
    while (!at_end() && !is("}") && !is(";")) {
      std::vector<SyntaxNode*> ec;
      while (is("@")) ec.push_back(parse_annotation());
      if (is_kind(TokenKind::kIdentifier)) ec.push_back(leaf());
      else break;
      if (is("(")) ec.push_back(parse_argument_list());
      if (is("{")) ec.push_back(parse_class_body());
      body.push_back(node(NodeKind::kEnumConstant, std::move(ec)));
      if (is(",")) body.push_back(leaf());
    }
    if (is(";")) {
      body.push_back(leaf());
      while (!at_end() && !is("}")) {
        SyntaxNode* m = parse_member();
        body.push_back(m ? m : recover());
      }
    }
    if (is("}")) body.push_back(leaf());
    c.push_back(node(NodeKind::kClassBody, std::move(body)));
    return node(NodeKind::kEnumDeclaration, std::move(c));
  }

  SyntaxNode* parse_class_body() {
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // {
    while (!at_end() && !is("}")) {
      if (is(";")) {
        c.push_back(leaf());
        continue;
      }
      SyntaxNode* m = parse_member();
      c.push_back(m ? m : recover());
    }
    if (is("}")) c.push_back(leaf());
    return node(NodeKind::kClassBody, std::move(c));
  }

  SyntaxNode* parse_member() {
    std::size_t save = pos_;

    // nested types (with their modifiers)
    if (SyntaxNode* t = parse_type_declaration()) return t;

    std::vector<SyntaxNode*> c;
    parse_modifiers(c);

    // initializer block: [static] { ... }
    if (is("{")) {
      c.push_back(parse_block());
      return node(NodeKind::kInitializerBlock, std::move(c));
    }

    if (is("<")) c.push_back(parse_type_parameters());

    // constructor: Name ( ... )
    if (is_kind(TokenKind::kIdentifier) && is("(", 1)) {
      c.push_back(leaf());  // name
      c.push_back(parse_formal_parameters());
      if (is("throws")) c.push_back(parse_throws());
      if (is("{")) c.push_back(parse_block());
      else if (is(";")) c.push_back(leaf());
      return node(NodeKind::kConstructorDeclaration, std::move(c));
    }

    SyntaxNode* type = try_parse_type();
    if (type && is_kind(TokenKind::kIdentifier)) {
      c.push_back(type);
      if (is("(", 1)) {
        // method
        c.push_back(leaf());  // name
        c.push_back(parse_formal_parameters());
        while (is("[") && is("]", 1)) {
          c.push_back(leaf());
          c.push_back(leaf());
        }
        if (is("throws")) c.push_back(parse_throws());
        if (is("{")) c.push_back(parse_block());
        else if (is(";")) c.push_back(leaf());
        else if (is("default")) {  // annotation member default
          c.push_back(leaf());
          consume_until_semi(c);
        }
        return node(NodeKind::kMethodDeclaration, std::move(c));
      }
      // field
      if (parse_declarators(c, /*require_semi=*/true)) {
        return node(NodeKind::kFieldDeclaration, std::move(c));
      }
    }
    pos_ = save;
    return nullptr;
  }

  SyntaxNode* parse_throws() {
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // throws
    while (!at_end()) {
      SyntaxNode* t = try_parse_type();
      if (!t) break;
      c.push_back(t);
      if (is(",")) {
        c.push_back(leaf());
        continue;
      }
      break;
    }
    return node(NodeKind::kThrowsClause, std::move(c));
  }

  SyntaxNode* parse_formal_parameters() {
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // (
    while (!at_end() && !is(")")) {
      std::vector<SyntaxNode*> p;
      parse_modifiers(p);
      SyntaxNode* t = try_parse_type();
      if (t) {
        p.push_back(t);
        // varargs
        while (is(".") && is(".", 1) && is(".", 2)) {
          p.push_back(leaf());
          p.push_back(leaf());
          p.push_back(leaf());
        }
        if (is_kind(TokenKind::kIdentifier)) {
          // 'this' receiver params and Name.this are rare; plain name here.
          p.push_back(leaf());
          while (is("[") && is("]", 1)) {
            p.push_back(leaf());
            p.push_back(leaf());
          }
          c.push_back(node(NodeKind::kFormalParameter, std::move(p)));
        } else {
          for (SyntaxNode* n : p) c.push_back(n);
        }
      } else if (!p.empty()) {
        for (SyntaxNode* n : p) c.push_back(n);
      } else {
        c.push_back(leaf());  // tolerate stray token
      }
      if (is(",")) c.push_back(leaf());
    }
    if (is(")")) c.push_back(leaf());
    return node(NodeKind::kFormalParameters, std::move(c));
  }

  // declarator (',' declarator)* [';']  -- appends into `c`
  bool parse_declarators(std::vector<SyntaxNode*>& c, bool require_semi) {
    while (true) {
      if (!is_kind(TokenKind::kIdentifier)) return false;
      std::vector<SyntaxNode*> d;
      d.push_back(leaf());  // name
      while (is("[") && is("]", 1)) {
        d.push_back(leaf());
        d.push_back(leaf());
      }
      if (is("=")) {
        d.push_back(leaf());
        SyntaxNode* init = is("{") ? parse_array_initializer() : parse_expression();
        if (!init) return false;
        d.push_back(init);
      }
      c.push_back(node(NodeKind::kVariableDeclarator, std::move(d)));
      if (is(",")) {
        c.push_back(leaf());
        continue;
      }
      break;
    }
    if (require_semi) {
      if (!is(";")) return false;
      c.push_back(leaf());
    }
    return true;
  }

  // -- statements --------------------------------------------------------

  SyntaxNode* parse_block() {
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // {
    while (!at_end() && !is("}")) {
      c.push_back(parse_statement());
    }
    if (is("}")) c.push_back(leaf());
    return node(NodeKind::kBlock, std::move(c));
  }

  SyntaxNode* parse_statement() {
    if (at_end()) return node(NodeKind::kError, {});
    std::size_t save = pos_;

    if (is("{")) return parse_block();
    if (is(";")) {
      std::vector<SyntaxNode*> c{leaf()};
      return node(NodeKind::kEmptyStatement, std::move(c));
    }
    if (is("if")) return parse_if();
    if (is("while")) return parse_while();
    if (is("do")) return parse_do();
    if (is("for")) return parse_for();
    if (is("switch")) return parse_switch();
    if (is("return")) return parse_kw_expr_statement(NodeKind::kReturnStatement, true);
    if (is("throw")) return parse_kw_expr_statement(NodeKind::kThrowStatement, false);
    if (is("try")) return parse_try();
    if (is("break") || is("continue")) {
      NodeKind k = is("break") ? NodeKind::kBreakStatement : NodeKind::kContinueStatement;
      std::vector<SyntaxNode*> c{leaf()};
      if (is_kind(TokenKind::kIdentifier)) c.push_back(leaf());
      if (is(";")) c.push_back(leaf());
      return node(k, std::move(c));
    }
    if (is("synchronized") && is("(", 1)) {
      std::vector<SyntaxNode*> c{leaf()};
      c.push_back(leaf());  // (
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      if (is(")")) c.push_back(leaf());
      if (is("{")) c.push_back(parse_block());
      return node(NodeKind::kSynchronizedStatement, std::move(c));
    }
    if (is("assert")) {
      std::vector<SyntaxNode*> c{leaf()};
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      else { pos_ = save; return recover(); }
      if (is(":")) {
        c.push_back(leaf());
        if (SyntaxNode* e = parse_expression()) c.push_back(e);
      }
      if (is(";")) c.push_back(leaf());
      return node(NodeKind::kAssertStatement, std::move(c));
    }

    // labeled statement
    if (is_kind(TokenKind::kIdentifier) && is(":", 1) && !is("::", 1)) {
      std::vector<SyntaxNode*> c;
      c.push_back(leaf());
      c.push_back(leaf());
      c.push_back(parse_statement());
      return node(NodeKind::kLabeledStatement, std::move(c));
    }

    // local type declaration
    if (SyntaxNode* t = parse_type_declaration()) return t;

    // local variable declaration (speculative)
    {
      std::vector<SyntaxNode*> c;
      parse_modifiers(c);
      SyntaxNode* type = try_parse_type();
      if (type && is_kind(TokenKind::kIdentifier) &&
          (is("=", 1) || is(";", 1) || is(",", 1) || (is("[", 1) && is("]", 2)))) {
        c.push_back(type);
        if (parse_declarators(c, /*require_semi=*/true)) {
          return node(NodeKind::kLocalVariableDeclaration, std::move(c));
        }
      }
      pos_ = save;
    }

    // expression statement
    if (SyntaxNode* e = parse_expression()) {
      std::vector<SyntaxNode*> c{e};
      if (is(";")) {
        c.push_back(leaf());
        return node(NodeKind::kExpressionStatement, std::move(c));
      }
      pos_ = save;
    } else {
      pos_ = save;
    }
    return recover();
  }

  SyntaxNode* parse_kw_expr_statement(NodeKind kind, bool expr_optional) {
    std::size_t save = pos_;
    std::vector<SyntaxNode*> c{leaf()};
    if (is(";")) {
      if (!expr_optional) { pos_ = save; return recover(); }
      c.push_back(leaf());
      return node(kind, std::move(c));
    }
    SyntaxNode* e = parse_expression();
    if (!e) { pos_ = save; return recover(); }
    c.push_back(e);
    if (is(";")) c.push_back(leaf());
    return node(kind, std::move(c));
  }

  SyntaxNode* parse_if() {
    std::vector<SyntaxNode*> c{leaf()};  // if
    if (accept("(", c)) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      accept(")", c);
    }
    c.push_back(parse_statement());
    if (is("else")) {
      c.push_back(leaf());
      c.push_back(parse_statement());
    }
    return node(NodeKind::kIfStatement, std::move(c));
  }

  SyntaxNode* parse_while() {
    std::vector<SyntaxNode*> c{leaf()};
    if (accept("(", c)) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      accept(")", c);
    }
    c.push_back(parse_statement());
    return node(NodeKind::kWhileStatement, std::move(c));
  }

  SyntaxNode* parse_do() {
    std::vector<SyntaxNode*> c{leaf()};
    c.push_back(parse_statement());
    if (accept("while", c) && accept("(", c)) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      accept(")", c);
    }
    accept(";", c);
    return node(NodeKind::kDoStatement, std::move(c));
  }

  SyntaxNode* parse_for() {
    std::vector<SyntaxNode*> c{leaf()};  // for
    if (!accept("(", c)) return node(NodeKind::kForStatement, std::move(c));

    // enhanced for?
    {
      std::size_t save = pos_;
      std::vector<SyntaxNode*> e;
      parse_modifiers(e);
      SyntaxNode* type = try_parse_type();
      if (type && is_kind(TokenKind::kIdentifier) && is(":", 1)) {
        e.push_back(type);
        e.push_back(leaf());  // name
        e.push_back(leaf());  // :
        if (SyntaxNode* expr = parse_expression()) e.push_back(expr);
        for (SyntaxNode* n : e) c.push_back(n);
        accept(")", c);
        c.push_back(parse_statement());
        return node(NodeKind::kEnhancedForStatement, std::move(c));
      }
      pos_ = save;
    }

    // init
    if (!is(";")) {
      std::size_t save = pos_;
      std::vector<SyntaxNode*> d;
      parse_modifiers(d);
      SyntaxNode* type = try_parse_type();
      bool decl_ok = false;
      if (type && is_kind(TokenKind::kIdentifier)) {
        d.push_back(type);
        if (parse_declarators(d, /*require_semi=*/false)) {
          c.push_back(node(NodeKind::kLocalVariableDeclaration, std::move(d)));
          decl_ok = true;
        }
      }
      if (!decl_ok) {
        pos_ = save;
        while (!at_end() && !is(";") && !is(")")) {
          if (SyntaxNode* e = parse_expression()) c.push_back(e);
          else break;
          if (is(",")) c.push_back(leaf());
          else break;
        }
      }
    }
    accept(";", c);
    // condition
    if (!is(";")) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
    }
    accept(";", c);
    // update
    while (!at_end() && !is(")")) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      else break;
      if (is(",")) c.push_back(leaf());
      else break;
    }
    accept(")", c);
    c.push_back(parse_statement());
    return node(NodeKind::kForStatement, std::move(c));
  }

  SyntaxNode* parse_switch() {
    std::vector<SyntaxNode*> c{leaf()};  // switch
    if (accept("(", c)) {
      if (SyntaxNode* e = parse_expression()) c.push_back(e);
      accept(")", c);
    }
    if (!is("{")) return node(NodeKind::kSwitchStatement, std::move(c));
    std::vector<SyntaxNode*> b;
    b.push_back(leaf());  // {
    while (!at_end() && !is("}")) {
      if (is("case") || is("default")) {
        std::vector<SyntaxNode*> l{leaf()};
        while (!at_end() && !is(":") && !is("->") && !is("}")) {
          if (SyntaxNode* e = parse_expression()) l.push_back(e);
          else l.push_back(leaf());
          if (is(",")) l.push_back(leaf());
          else break;
        }
        if (is(":") || is("->")) l.push_back(leaf());
        b.push_back(node(NodeKind::kSwitchLabel, std::move(l)));
        continue;
      }
      b.push_back(parse_statement());
    }
    if (is("}")) b.push_back(leaf());
    c.push_back(node(NodeKind::kSwitchBlock, std::move(b)));
    return node(NodeKind::kSwitchStatement, std::move(c));
  }

  SyntaxNode* parse_try() {
    std::vector<SyntaxNode*> c{leaf()};  // try
    if (is("(")) {
      std::vector<SyntaxNode*> r{leaf()};
      while (!at_end() && !is(")")) {
        std::size_t save = pos_;
        std::vector<SyntaxNode*> d;
        parse_modifiers(d);
        SyntaxNode* type = try_parse_type();
        if (type && is_kind(TokenKind::kIdentifier) && is("=", 1)) {
          d.push_back(type);
          std::vector<SyntaxNode*> v;
          v.push_back(leaf());  // name
          v.push_back(leaf());  // =
          if (SyntaxNode* e = parse_expression()) v.push_back(e);
          d.push_back(node(NodeKind::kVariableDeclarator, std::move(v)));
          r.push_back(node(NodeKind::kLocalVariableDeclaration, std::move(d)));
        } else {
          pos_ = save;
          if (SyntaxNode* e = parse_expression()) r.push_back(e);
          else r.push_back(leaf());
        }
        if (is(";")) r.push_back(leaf());
      }
      if (is(")")) r.push_back(leaf());
      c.push_back(node(NodeKind::kResourceList, std::move(r)));
    }
    if (is("{")) c.push_back(parse_block());
    while (is("catch")) {
      std::vector<SyntaxNode*> k{leaf()};
      if (accept("(", k)) {
        parse_modifiers(k);
        while (!at_end()) {
          SyntaxNode* t = try_parse_type();
          if (t) k.push_back(t);
          else break;
          if (is("|")) { k.push_back(leaf()); continue; }
          break;
        }
        if (is_kind(TokenKind::kIdentifier)) {
          std::vector<SyntaxNode*> p{leaf()};
          k.push_back(node(NodeKind::kFormalParameter, std::move(p)));
        }
        accept(")", k);
      }
      if (is("{")) k.push_back(parse_block());
      c.push_back(node(NodeKind::kCatchClause, std::move(k)));
    }
    if (is("finally")) {
      std::vector<SyntaxNode*> f{leaf()};
      if (is("{")) f.push_back(parse_block());
      c.push_back(node(NodeKind::kFinallyClause, std::move(f)));
    }
    return node(NodeKind::kTryStatement, std::move(c));
  }

  // -- expressions ---------------------------------------------------------

  SyntaxNode* parse_expression() { return parse_assignment(); }

  SyntaxNode* parse_assignment() {
    SyntaxNode* lhs = parse_conditional();
    if (!lhs) return nullptr;
    // simple and compound assignment operators
    static constexpr std::string_view kAssignOps[] = {
        "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="};
    for (std::string_view op : kAssignOps) {
      if (is(op)) {
        std::vector<SyntaxNode*> c{lhs, leaf()};
        SyntaxNode* rhs = parse_assignment();
        if (!rhs) return nullptr;
        c.push_back(rhs);
        return node(NodeKind::kAssignmentExpression, std::move(c));
      }
    }
    // '>>=' and '>>>=' come apart as single '>' tokens
    if (is(">") && adjacent(0) && is(">", 1)) {
      if (adjacent(1) && is("=", 2)) {
        std::vector<SyntaxNode*> c{lhs, leaf(), leaf(), leaf()};
        SyntaxNode* rhs = parse_assignment();
        if (!rhs) return nullptr;
        c.push_back(rhs);
        return node(NodeKind::kAssignmentExpression, std::move(c));
      }
      if (adjacent(1) && is(">", 2) && adjacent(2) && is("=", 3)) {
        std::vector<SyntaxNode*> c{lhs, leaf(), leaf(), leaf(), leaf()};
        SyntaxNode* rhs = parse_assignment();
        if (!rhs) return nullptr;
        c.push_back(rhs);
        return node(NodeKind::kAssignmentExpression, std::move(c));
      }
    }
    return lhs;
  }

  SyntaxNode* parse_conditional() {
    SyntaxNode* cond = parse_binary(0);
    if (!cond) return nullptr;
    if (!is("?")) return cond;
    std::vector<SyntaxNode*> c{cond, leaf()};
    SyntaxNode* then = parse_expression();
    if (!then) return nullptr;
    c.push_back(then);
    if (!is(":")) return nullptr;
    c.push_back(leaf());
    SyntaxNode* els = parse_conditional();
    if (!els) return nullptr;
    c.push_back(els);
    return node(NodeKind::kConditionalExpression, std::move(c));
  }

  // Binary precedence levels, loosest first.
  // 0 ||, 1 &&, 2 |, 3 ^, 4 &, 5 == !=, 6 relational/instanceof, 7 shift,
  // 8 + -, 9 * / %
  static constexpr int kMaxLevel = 9;

  // Returns number of operator tokens when current position starts a binary
  // operator of `level`; 0 otherwise.
  int binary_op_arity(int level) const {
    switch (level) {
      case 0: return is("||") ? 1 : 0;
      case 1: return is("&&") ? 1 : 0;
      case 2: return (is("|") && !is("||")) ? 1 : 0;
      case 3: return is("^") ? 1 : 0;
      case 4: return (is("&") && !is("&&")) ? 1 : 0;
      case 5: return (is("==") || is("!=")) ? 1 : 0;
      case 6:
        if (is("<=")) return 1;
        if (is(">") && adjacent(0) && is("=", 1)) return 2;  // '>='
        if (is("<")) return 1;
        if (is(">") && !(adjacent(0) && is(">", 1))) return 1;
        return 0;
      case 7:
        if (is("<<")) return 1;
        if (is(">") && adjacent(0) && is(">", 1)) {
          if (adjacent(1) && is("=", 2)) return 0;  // '>>=' assignment
          if (adjacent(1) && is(">", 2)) {
            if (adjacent(2) && is("=", 3)) return 0;  // '>>>='
            return 3;                                 // '>>>'
          }
          return 2;  // '>>'
        }
        return 0;
      case 8: return (is("+") || is("-")) ? 1 : 0;
      case 9: return (is("*") || is("/") || is("%")) ? 1 : 0;
      default: return 0;
    }
  }

  SyntaxNode* parse_binary(int level) {
    if (level > kMaxLevel) return parse_unary();
    SyntaxNode* lhs = parse_binary(level + 1);
    if (!lhs) return nullptr;
    while (!at_end()) {
      if (level == 6 && is("instanceof")) {
        std::vector<SyntaxNode*> c{lhs, leaf()};
        SyntaxNode* t = try_parse_type();
        if (!t) return nullptr;
        c.push_back(t);
        if (is_kind(TokenKind::kIdentifier)) c.push_back(leaf());  // pattern
        lhs = node(NodeKind::kInstanceofExpression, std::move(c));
        continue;
      }
      int arity = binary_op_arity(level);
      if (arity == 0) break;
      std::vector<SyntaxNode*> c{lhs};
      for (int i = 0; i < arity; ++i) c.push_back(leaf());
      SyntaxNode* rhs = parse_binary(level + 1);
      if (!rhs) return nullptr;
      c.push_back(rhs);
      lhs = node(NodeKind::kBinaryExpression, std::move(c));
    }
    return lhs;
  }

  SyntaxNode* parse_unary() {
    if (is("+") || is("-") || is("!") || is("~") || is("++") || is("--")) {
      std::vector<SyntaxNode*> c{leaf()};
      SyntaxNode* operand = parse_unary();
      if (!operand) return nullptr;
      c.push_back(operand);
      return node(NodeKind::kUnaryExpression, std::move(c));
    }
    // cast
    if (is("(")) {
      std::size_t save = pos_;
      std::vector<SyntaxNode*> c{leaf()};
      SyntaxNode* type = try_parse_type();
      if (type && is(")")) {
        bool plausible = cast_target_follows(*type);
        if (plausible) {
          c.push_back(type);
          c.push_back(leaf());  // )
          SyntaxNode* operand = parse_unary();
          if (operand) {
            c.push_back(operand);
            return node(NodeKind::kCastExpression, std::move(c));
          }
        }
      }
      pos_ = save;
    }
    return parse_postfix();
  }

  // Decides '(X)' is a cast by looking at X and what follows ')'.
  bool cast_target_follows(const SyntaxNode& type) const {
    std::string_view after = text(1);  // token after ')'
    if (after.empty()) return false;
    bool complex_type = false;
    {
      std::string_view t = slice(src_, type.span);
      complex_type = is_primitive_word(t) ||
                     t.find('<') != std::string_view::npos ||
                     t.find('[') != std::string_view::npos ||
                     t.find('.') != std::string_view::npos;
    }
    const Token& tok = peek(1);
    bool operand_start =
        tok.kind == TokenKind::kIdentifier || tok.kind == TokenKind::kIntLiteral ||
        tok.kind == TokenKind::kFloatLiteral || tok.kind == TokenKind::kCharLiteral ||
        tok.kind == TokenKind::kStringLiteral || tok.kind == TokenKind::kTextBlock ||
        after == "this" || after == "new" || after == "super" || after == "!" ||
        after == "~" || after == "true" || after == "false" || after == "null";
    if (complex_type) {
      return operand_start || after == "(" || after == "+" || after == "-";
    }
    return operand_start;
  }

  SyntaxNode* parse_postfix() {
    SyntaxNode* base = parse_primary();
    if (!base) return nullptr;
    while (!at_end()) {
      if (is(".")) {
        if (is_kind(TokenKind::kIdentifier, 1)) {
          if (is("(", 2)) {
            std::vector<SyntaxNode*> c{base, leaf(), leaf()};
            c.push_back(parse_argument_list());
            base = node(NodeKind::kMethodInvocation, std::move(c));
            continue;
          }
          std::vector<SyntaxNode*> c{base, leaf(), leaf()};
          base = node(NodeKind::kFieldAccess, std::move(c));
          continue;
        }
        if (is("class", 1)) {
          std::vector<SyntaxNode*> c{base, leaf(), leaf()};
          base = node(NodeKind::kClassLiteral, std::move(c));
          continue;
        }
        if (is("this", 1) || is("super", 1) || is("new", 1)) {
          std::vector<SyntaxNode*> c{base, leaf(), leaf()};
          if (is("(")) c.push_back(parse_argument_list());
          base = node(NodeKind::kFieldAccess, std::move(c));
          continue;
        }
        if (is("<", 1)) {
          // explicit generic method invocation: recv.<T>name(args)
          std::vector<SyntaxNode*> c{base, leaf()};
          c.push_back(parse_type_parameters());
          if (is_kind(TokenKind::kIdentifier)) c.push_back(leaf());
          if (is("(")) c.push_back(parse_argument_list());
          base = node(NodeKind::kMethodInvocation, std::move(c));
          continue;
        }
        return nullptr;
      }
      if (is("[") && !is("]", 1)) {
        std::vector<SyntaxNode*> c{base, leaf()};
        SyntaxNode* idx = parse_expression();
        if (!idx) return nullptr;
        c.push_back(idx);
        if (!is("]")) return nullptr;
        c.push_back(leaf());
        base = node(NodeKind::kArrayAccess, std::move(c));
        continue;
      }
      if (is("++") || is("--")) {
        std::vector<SyntaxNode*> c{base, leaf()};
        base = node(NodeKind::kPostfixExpression, std::move(c));
        continue;
      }
      if (is("::")) {
        std::vector<SyntaxNode*> c{base, leaf()};
        if (is_kind(TokenKind::kIdentifier) || is("new")) c.push_back(leaf());
        base = node(NodeKind::kMethodReference, std::move(c));
        continue;
      }
      break;
    }
    return base;
  }

  SyntaxNode* parse_argument_list() {
    std::vector<SyntaxNode*> c;
    c.push_back(leaf());  // (
    while (!at_end() && !is(")")) {
      SyntaxNode* e = parse_expression();
      if (!e) {
        c.push_back(leaf());  // tolerate and continue
        continue;
      }
      c.push_back(e);
      if (is(",")) c.push_back(leaf());
    }
    if (is(")")) c.push_back(leaf());
    return node(NodeKind::kArgumentList, std::move(c));
  }

  bool lambda_ahead() const {
    if (!is("(")) return false;
    int depth = 0;
    std::size_t k = 0;
    while (pos_ + k < toks_.size()) {
      std::string_view t = slice(src_, toks_[pos_ + k].span);
      if (t == "(") ++depth;
      else if (t == ")") {
        --depth;
        if (depth == 0) {
          return pos_ + k + 1 < toks_.size() &&
                 slice(src_, toks_[pos_ + k + 1].span) == "->";
        }
      }
      ++k;
    }
    return false;
  }

  void parse_lambda_params_into(std::vector<SyntaxNode*>& c) {
    c.push_back(leaf());  // (
    while (!at_end() && !is(")")) {
      std::size_t save = pos_;
      std::vector<SyntaxNode*> p;
      parse_modifiers(p);
      SyntaxNode* type = try_parse_type();
      if (type && is_kind(TokenKind::kIdentifier)) {
        p.push_back(type);
        p.push_back(leaf());
        c.push_back(node(NodeKind::kLambdaParameter, std::move(p)));
      } else {
        pos_ = save;
        if (is_kind(TokenKind::kIdentifier)) {
          std::vector<SyntaxNode*> q{leaf()};
          c.push_back(node(NodeKind::kLambdaParameter, std::move(q)));
        } else {
          c.push_back(leaf());
        }
      }
      if (is(",")) c.push_back(leaf());
    }
    if (is(")")) c.push_back(leaf());
  }

  SyntaxNode* parse_primary() {
    if (at_end()) return nullptr;

    // lambda forms
    if (lambda_ahead()) {
      std::vector<SyntaxNode*> c;
      parse_lambda_params_into(c);
      if (is("->")) {
        c.push_back(leaf());
        SyntaxNode* body = is("{") ? parse_block() : parse_expression();
        if (body) {
          c.push_back(body);
          return node(NodeKind::kLambdaExpression, std::move(c));
        }
      }
      return nullptr;
    }
    if (is_kind(TokenKind::kIdentifier) && is("->", 1)) {
      std::vector<SyntaxNode*> p{leaf()};
      std::vector<SyntaxNode*> c{node(NodeKind::kLambdaParameter, std::move(p))};
      c.push_back(leaf());  // ->
      SyntaxNode* body = is("{") ? parse_block() : parse_expression();
      if (!body) return nullptr;
      c.push_back(body);
      return node(NodeKind::kLambdaExpression, std::move(c));
    }

    if (is("(")) {
      std::vector<SyntaxNode*> c{leaf()};
      SyntaxNode* e = parse_expression();
      if (!e) return nullptr;
      c.push_back(e);
      if (!is(")")) return nullptr;
      c.push_back(leaf());
      return node(NodeKind::kParenthesizedExpression, std::move(c));
    }

    if (is("new")) return parse_creation();

    if (is("this") || is("super")) {
      SyntaxNode* kw = leaf();
      if (is("(")) {
        // this(...) / super(...) constructor invocation
        std::vector<SyntaxNode*> c{kw};
        c.push_back(parse_argument_list());
        return node(NodeKind::kMethodInvocation, std::move(c));
      }
      return kw;
    }

    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::kIntLiteral:
      case TokenKind::kFloatLiteral:
      case TokenKind::kCharLiteral:
      case TokenKind::kStringLiteral:
      case TokenKind::kTextBlock:
        return leaf();
      case TokenKind::kKeyword: {
        std::string_view w = text();
        if (w == "true" || w == "false" || w == "null") return leaf();
        if (is_primitive_word(w)) {
          // primitive class literals: int.class, int[].class
          SyntaxNode* kw = leaf();
          while (is("[") && is("]", 1)) {
            std::vector<SyntaxNode*> c{kw, leaf(), leaf()};
            kw = node(NodeKind::kType, std::move(c));
          }
          return kw;
        }
        if (w == "switch") {
          // switch expression: parse as statement-shaped node
          return parse_switch();
        }
        return nullptr;
      }
      case TokenKind::kIdentifier: {
        if (is("(", 1)) {
          std::vector<SyntaxNode*> c{leaf()};
          c.push_back(parse_argument_list());
          return node(NodeKind::kMethodInvocation, std::move(c));
        }
        return leaf();
      }
      default:
        return nullptr;
    }
  }

  SyntaxNode* parse_creation() {
    std::vector<SyntaxNode*> c{leaf()};  // new
    SyntaxNode* type = try_parse_type();
    if (!type) return nullptr;
    // Array creation: type already swallowed '[]' dims, or explicit '[expr]'
    if (is("[")) {
      c.push_back(type);
      while (is("[")) {
        c.push_back(leaf());
        if (!is("]")) {
          SyntaxNode* e = parse_expression();
          if (!e) return nullptr;
          c.push_back(e);
        }
        if (!is("]")) return nullptr;
        c.push_back(leaf());
      }
      if (is("{")) c.push_back(parse_array_initializer());
      return node(NodeKind::kArrayCreation, std::move(c));
    }
    std::string_view ttext = slice(src_, type->span);
    if (ttext.find('[') != std::string_view::npos) {
      // new int[]{...} — dims were folded into the type
      c.push_back(type);
      if (is("{")) c.push_back(parse_array_initializer());
      return node(NodeKind::kArrayCreation, std::move(c));
    }
    c.push_back(type);
    if (is("(")) {
      c.push_back(parse_argument_list());
      if (is("{")) c.push_back(parse_class_body());  // anonymous class
      return node(NodeKind::kObjectCreation, std::move(c));
    }
    return node(NodeKind::kObjectCreation, std::move(c));
  }

  SyntaxNode* parse_array_initializer() {
    std::vector<SyntaxNode*> c{leaf()};  // {
    while (!at_end() && !is("}")) {
      SyntaxNode* e = is("{") ? parse_array_initializer() : parse_expression();
      if (!e) {
        c.push_back(leaf());
        continue;
      }
      c.push_back(e);
      if (is(",")) c.push_back(leaf());
    }
    if (is("}")) c.push_back(leaf());
    return node(NodeKind::kArrayInitializer, std::move(c));
  }

  SyntaxTree& tree_;
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

namespace {

bool has_significant_tokens(std::string_view source) {
  for (const Token& t : lex_java(source)) {
    if (!is_trivia(t.kind)) return true;
  }
  return false;
}

// A fragment (bare method or class members) needs a synthetic wrapper
// class; a full compilation unit does not.
bool needs_wrap(std::string_view source) {
  int depth = 0;
  std::vector<Token> toks;
  for (const Token& t : lex_java(source)) {
    if (!is_trivia(t.kind)) toks.push_back(t);
  }
  for (std::size_t i = 0; i < toks.size(); ++i) {
    std::string_view t = slice(source, toks[i].span);
    if (t == "{") ++depth;
    else if (t == "}") --depth;
    else if (depth == 0) {
      if (t == "class" || t == "interface" || t == "enum" || t == "package" ||
          t == "import")
        return false;
      if (t == "record" && i + 2 < toks.size() &&
          toks[i + 1].kind == TokenKind::kIdentifier &&
          slice(source, toks[i + 2].span) == "(")
        return false;
    }
  }
  return true;
}

SyntaxNode* copy_shifted(SyntaxTree& dst, const SyntaxNode& src, std::size_t offset) {
  SyntaxNode* n = dst.make(src.kind);
  n->span = Span{src.span.start - offset, src.span.end - offset};
  n->leaf = src.leaf;
  n->children.reserve(src.children.size());
  for (const SyntaxNode* c : src.children) {
    SyntaxNode* copied = copy_shifted(dst, *c, offset);
    copied->parent = n;
    n->children.push_back(copied);
  }
  return n;
}

}  // namespace

SyntaxTree parse_java(std::string source) {
  if (!has_significant_tokens(source)) {
    throw ParseFatal("no parsable content in input");
  }

  SyntaxTree tree;
  if (!needs_wrap(source)) {
    tree.source_ = std::move(source);
    Parser parser(tree, tree.source_);
    SyntaxNode* root = parser.parse_compilation_unit();
    root->span = Span{0, tree.source_.size()};
    tree.root_ = root;
    return tree;
  }

  std::string wrapped;
  wrapped.reserve(source.size() + kWrapPrefix.size() + kWrapSuffix.size());
  wrapped.append(kWrapPrefix);
  wrapped.append(source);
  wrapped.append(kWrapSuffix);

  SyntaxTree scratch;
  scratch.source_ = std::move(wrapped);
  Parser parser(scratch, scratch.source_);
  SyntaxNode* cu = parser.parse_compilation_unit();
  scratch.root_ = cu;

  tree.source_ = std::move(source);
  tree.wrapped_ = true;
  SyntaxNode* root = tree.make(NodeKind::kSourceFragment);
  root->span = Span{0, tree.source_.size()};

  // Hoist the wrapper's class body members, shifting spans back.
  const SyntaxNode* wrap_class = nullptr;
  for (const SyntaxNode* c : cu->children) {
    if (c->kind == NodeKind::kClassDeclaration) {
      wrap_class = c;
      break;
    }
  }
  if (wrap_class) {
    if (const SyntaxNode* body = wrap_class->first_child(NodeKind::kClassBody)) {
      for (const SyntaxNode* m : body->children) {
        std::string_view t = m->text(scratch.source_);
        if (m->leaf && (t == "{" || t == "}")) continue;
        SyntaxNode* copied = copy_shifted(tree, *m, kWrapPrefix.size());
        copied->parent = root;
        root->children.push_back(copied);
      }
    }
  }
  tree.root_ = root;
  return tree;
}

std::vector<const SyntaxNode*> find_nodes(const SyntaxTree& tree, NodeKind kind) {
  std::vector<const SyntaxNode*> out;
  walk(tree.root(), [&](const SyntaxNode& n) {
    if (n.kind == kind) out.push_back(&n);
  });
  return out;
}

std::vector<const SyntaxNode*> find_nodes(const SyntaxTree& tree,
                                          std::string_view kind) {
  std::optional<NodeKind> k = kind_from_name(kind);
  if (!k) return {};
  return find_nodes(tree, *k);
}

}  // namespace codemorph
