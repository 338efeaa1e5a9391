#include "scopes.hpp"

#include <algorithm>

namespace codemorph::internal {

namespace {

class ScopeWalker {
 public:
  explicit ScopeWalker(const SyntaxTree& tree)
      : tree_(tree), src_(tree.source()) {}

  ScopeAnalysis take() && { return std::move(out_); }

  void run() {
    push_scope();
    visit(&tree_.root());
    pop_scope();
  }

 private:
  using Scope = std::unordered_map<std::string, DeclInfo*>;

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }

  DeclInfo* declare(const SyntaxNode* name_node, std::string type_text,
                    DeclInfo::Category category) {
    out_.decls.push_back(DeclInfo{});
    DeclInfo* d = &out_.decls.back();
    d->name_node = name_node;
    d->name = std::string(name_node->text(src_));
    d->type_text = std::move(type_text);
    d->category = category;
    scopes_.back()[d->name] = d;
    if (category != DeclInfo::Category::kField) {
      out_.declaration_order.push_back(d);
    }
    return d;
  }

  DeclInfo* resolve(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(name);
      if (found != it->end()) return found->second;
    }
    return nullptr;
  }

  std::string type_text_of(const SyntaxNode* decl) const {
    const SyntaxNode* t = decl->first_child(NodeKind::kType);
    return t ? std::string(t->text(src_)) : std::string();
  }

  // Registers the field declarations of a class body before its members
  // are visited; fields are visible throughout the class.
  void prepass_fields(const SyntaxNode* class_body) {
    for (const SyntaxNode* m : class_body->children) {
      if (m->kind != NodeKind::kFieldDeclaration) continue;
      std::string type = type_text_of(m);
      for (const SyntaxNode* d : m->children) {
        if (d->kind != NodeKind::kVariableDeclarator) continue;
        const SyntaxNode* name = d->first_child(NodeKind::kIdentifier);
        if (name) declare(name, type, DeclInfo::Category::kField);
      }
    }
  }

  void visit_declarator(const SyntaxNode* d, const std::string& type,
                        DeclInfo::Category category) {
    const SyntaxNode* name = nullptr;
    for (const SyntaxNode* c : d->children) {
      if (!name && c->kind == NodeKind::kIdentifier) {
        name = c;
        declare(name, type, category);
        continue;
      }
      visit(c);  // initializer (and dims, which contain no identifiers)
    }
  }

  void visit_children(const SyntaxNode* n) {
    for (const SyntaxNode* c : n->children) visit(c);
  }

  void visit(const SyntaxNode* n) {
    switch (n->kind) {
      // No variable usages live inside these.
      case NodeKind::kType:
      case NodeKind::kTypeParameters:
      case NodeKind::kAnnotation:
      case NodeKind::kImportDeclaration:
      case NodeKind::kPackageDeclaration:
      case NodeKind::kThrowsClause:
      case NodeKind::kClassLiteral:
        return;

      case NodeKind::kClassDeclaration:
      case NodeKind::kInterfaceDeclaration:
      case NodeKind::kEnumDeclaration:
      case NodeKind::kRecordDeclaration:
      case NodeKind::kAnnotationDeclaration:
      case NodeKind::kSourceFragment: {
        push_scope();
        const SyntaxNode* body = n->first_child(NodeKind::kClassBody);
        if (body) prepass_fields(body);
        if (n->kind == NodeKind::kSourceFragment) prepass_fields(n);
        visit_children(n);
        pop_scope();
        return;
      }
      case NodeKind::kClassBody:
        visit_children(n);
        return;

      case NodeKind::kFieldDeclaration: {
        // Names were registered in the prepass; walk initializers only.
        for (const SyntaxNode* d : n->children) {
          if (d->kind != NodeKind::kVariableDeclarator) continue;
          bool past_name = false;
          for (const SyntaxNode* c : d->children) {
            if (!past_name && c->kind == NodeKind::kIdentifier) {
              past_name = true;
              continue;
            }
            visit(c);
          }
        }
        return;
      }

      case NodeKind::kMethodDeclaration:
      case NodeKind::kConstructorDeclaration:
      case NodeKind::kLambdaExpression:
      case NodeKind::kForStatement:
      case NodeKind::kBlock:
      case NodeKind::kSwitchBlock:
      case NodeKind::kTryStatement:
      case NodeKind::kCatchClause:
        push_scope();
        visit_children(n);
        pop_scope();
        return;

      case NodeKind::kEnhancedForStatement: {
        push_scope();
        // JLS scope: the loop variable is visible in the body only, not in
        // the iterable expression.
        const SyntaxNode* var = nullptr;
        const SyntaxNode* body =
            n->children.empty() ? nullptr : n->children.back();
        for (const SyntaxNode* c : n->children) {
          if (c == body && !c->leaf) continue;
          if (!var && c->kind == NodeKind::kIdentifier) {
            var = c;
            continue;
          }
          visit(c);
        }
        if (var) declare(var, type_text_of(n), DeclInfo::Category::kLocal);
        if (body && !body->leaf) visit(body);
        pop_scope();
        return;
      }

      case NodeKind::kLocalVariableDeclaration: {
        std::string type = type_text_of(n);
        for (const SyntaxNode* c : n->children) {
          if (c->kind == NodeKind::kVariableDeclarator) {
            visit_declarator(c, type, DeclInfo::Category::kLocal);
          }
        }
        return;
      }

      case NodeKind::kFormalParameter: {
        const SyntaxNode* name = n->first_child(NodeKind::kIdentifier);
        if (name) {
          std::string type = type_text_of(n);
          if (type.empty() && n->parent &&
              n->parent->kind == NodeKind::kCatchClause) {
            const SyntaxNode* t = n->parent->first_child(NodeKind::kType);
            if (t) type = std::string(t->text(src_));
          }
          declare(name, type, DeclInfo::Category::kParam);
        }
        return;
      }
      case NodeKind::kLambdaParameter: {
        const SyntaxNode* name = n->first_child(NodeKind::kIdentifier);
        if (name) declare(name, type_text_of(n), DeclInfo::Category::kParam);
        return;
      }

      case NodeKind::kFieldAccess: {
        if (!n->children.empty()) visit(n->children.front());
        return;
      }
      case NodeKind::kMethodReference: {
        if (!n->children.empty()) visit(n->children.front());
        return;
      }
      case NodeKind::kMethodInvocation: {
        // Skip the invoked name; walk receiver and arguments.
        const SyntaxNode* args = n->first_child(NodeKind::kArgumentList);
        for (const SyntaxNode* c : n->children) {
          if (c->kind == NodeKind::kIdentifier) {
            bool is_name = false;
            if (args) {
              // the identifier directly preceding the argument list
              is_name = c->span.end <= args->span.start;
              for (const SyntaxNode* other : n->children) {
                if (other->kind == NodeKind::kIdentifier &&
                    other->span.start > c->span.start &&
                    other->span.end <= args->span.start) {
                  is_name = false;  // a later identifier is the name
                }
              }
            }
            if (is_name) continue;
          }
          visit(c);
        }
        return;
      }
      case NodeKind::kLabeledStatement: {
        bool skipped = false;
        for (const SyntaxNode* c : n->children) {
          if (!skipped && c->kind == NodeKind::kIdentifier) {
            skipped = true;
            continue;
          }
          visit(c);
        }
        return;
      }
      case NodeKind::kBreakStatement:
      case NodeKind::kContinueStatement:
        return;

      case NodeKind::kIdentifier: {
        DeclInfo* d = resolve(std::string(n->text(src_)));
        if (d) out_.usages.emplace(n, d);
        return;
      }

      default:
        visit_children(n);
        return;
    }
  }

  const SyntaxTree& tree_;
  std::string_view src_;
  ScopeAnalysis out_;
  std::vector<Scope> scopes_;
};

}  // namespace

ScopeAnalysis analyze_scopes(const SyntaxTree& tree) {
  ScopeWalker walker(tree);
  walker.run();
  return std::move(walker).take();
}

}  // namespace codemorph::internal
