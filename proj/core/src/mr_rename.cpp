// MR1 VariableRenaming and MR2 MethodRenaming: scope-aware token-level
// renames with a recorded old->new mapping for later reversal.

#include <map>
#include <string>
#include <unordered_map>

#include "codemorph/mr.hpp"
#include "mr_internal.hpp"
#include "scopes.hpp"

namespace codemorph {

using internal::DeclInfo;
using internal::UnitView;

MrOutcome mr1_variable_renaming(const std::string& source, MrContext& ctx) {
  UnitView unit = internal::make_unit(source);
  internal::ScopeAnalysis scopes = internal::analyze_scopes(unit.tree);

  std::unordered_map<const DeclInfo*, std::string> new_names;
  std::unordered_set<std::string> assigned;
  RenameMap map;
  std::vector<TextEdit> edits;

  for (DeclInfo* decl : scopes.declaration_order) {
    std::string fresh = internal::fresh_name(decl->name, "_var", ctx.var_counter,
                                             unit.identifiers, assigned);
    new_names.emplace(decl, fresh);
    map.variables.push_back(RenameEntry{decl->name, fresh});
    edits.push_back(TextEdit{decl->name_node->span, fresh});
  }
  for (const auto& [usage, decl] : scopes.usages) {
    auto it = new_names.find(decl);
    if (it == new_names.end()) continue;  // fields stay untouched
    edits.push_back(TextEdit{usage->span, it->second});
  }
  return internal::finish(unit, std::move(edits), std::move(map));
}

namespace {

bool has_override_annotation(const SyntaxNode* method, std::string_view src) {
  for (const SyntaxNode* c : method->children) {
    if (c->kind != NodeKind::kAnnotation) continue;
    std::string_view t = c->text(src);
    if (t.find("Override") != std::string_view::npos) return true;
  }
  return false;
}

bool inside_anonymous_class(const SyntaxNode* method) {
  for (const SyntaxNode* p = method->parent; p; p = p->parent) {
    if (p->kind == NodeKind::kObjectCreation) return true;
  }
  return false;
}

}  // namespace

MrOutcome mr2_method_renaming(const std::string& source, MrContext& ctx) {
  UnitView unit = internal::make_unit(source);
  std::string_view src = unit.source;

  // Overloads share one new name so call sites stay unambiguous.
  std::map<std::string, std::string> renames;
  std::unordered_set<std::string> assigned;
  std::vector<TextEdit> edits;
  RenameMap map;

  for (const SyntaxNode* m : find_nodes(unit.tree, NodeKind::kMethodDeclaration)) {
    const SyntaxNode* name_node = m->first_child(NodeKind::kIdentifier);
    if (!name_node) continue;
    std::string name(name_node->text(src));
    if (name == "main") continue;
    // Renaming an override (or an anonymous-class member) would detach it
    // from the interface it implements.
    if (has_override_annotation(m, src) || inside_anonymous_class(m)) continue;

    auto it = renames.find(name);
    if (it == renames.end()) {
      std::string fresh = internal::fresh_name(name, "Method", ctx.meth_counter,
                                               unit.identifiers, assigned);
      it = renames.emplace(name, fresh).first;
      map.methods.push_back(RenameEntry{name, fresh});
    }
    edits.push_back(TextEdit{name_node->span, it->second});
  }

  if (!renames.empty()) {
    for (const SyntaxNode* call :
         find_nodes(unit.tree, NodeKind::kMethodInvocation)) {
      // Unqualified or this-qualified calls refer to this unit's methods.
      const SyntaxNode* args = call->first_child(NodeKind::kArgumentList);
      if (!args || call->children.empty()) continue;
      const SyntaxNode* first = call->children.front();
      const SyntaxNode* name_node = nullptr;
      if (first->kind == NodeKind::kIdentifier && call->children.size() == 2) {
        name_node = first;
      } else if (first->leaf && first->text(src) == "this" &&
                 call->children.size() == 4 &&
                 call->children[2]->kind == NodeKind::kIdentifier) {
        name_node = call->children[2];
      }
      if (!name_node) continue;
      auto it = renames.find(std::string(name_node->text(src)));
      if (it == renames.end()) continue;
      edits.push_back(TextEdit{name_node->span, it->second});
    }
  }
  return internal::finish(unit, std::move(edits), std::move(map));
}

}  // namespace codemorph
