// MR6 DummyVariable, MR7 AddingComments, MR8 VariableDeclaration,
// MR9 ForToWhileLoop: block-level insertions and statement restructuring.

#include <algorithm>
#include <cctype>
#include <string>

#include "codemorph/hash.hpp"
#include "codemorph/lexer.hpp"
#include "codemorph/mr.hpp"
#include "codemorph/rng.hpp"
#include "mr_internal.hpp"

namespace codemorph {

using internal::UnitView;

namespace {

bool is_statement_node(const SyntaxNode* n) { return !n->leaf; }

bool is_statement_kind(NodeKind k) {
  switch (k) {
    case NodeKind::kBlock:
    case NodeKind::kLocalVariableDeclaration:
    case NodeKind::kExpressionStatement:
    case NodeKind::kIfStatement:
    case NodeKind::kWhileStatement:
    case NodeKind::kDoStatement:
    case NodeKind::kForStatement:
    case NodeKind::kEnhancedForStatement:
    case NodeKind::kSwitchStatement:
    case NodeKind::kReturnStatement:
    case NodeKind::kThrowStatement:
    case NodeKind::kTryStatement:
    case NodeKind::kBreakStatement:
    case NodeKind::kContinueStatement:
    case NodeKind::kLabeledStatement:
    case NodeKind::kSynchronizedStatement:
    case NodeKind::kAssertStatement:
    case NodeKind::kEmptyStatement:
    case NodeKind::kClassDeclaration:
    case NodeKind::kError:
      return true;
    default:
      return false;
  }
}

// Direct statements of a block (children minus the brace leaves).
std::vector<const SyntaxNode*> block_statements(const SyntaxNode* block) {
  std::vector<const SyntaxNode*> out;
  for (const SyntaxNode* c : block->children) {
    if (is_statement_node(c)) out.push_back(c);
  }
  return out;
}

// Conservative reachability: whether execution can fall past `stmt`.
// Statements we cannot analyze default to the safe side for insertion
// decisions (a false negative only removes an insertion point).
bool can_complete_normally(const SyntaxNode* stmt, std::string_view src);

bool contains_break_token(const SyntaxNode* n, std::string_view src) {
  bool found = false;
  walk(*n, [&](const SyntaxNode& c) {
    if (c.kind == NodeKind::kBreakStatement) found = true;
  });
  (void)src;
  return found;
}

bool condition_is_literal_true(const SyntaxNode* loop, std::string_view src) {
  for (const SyntaxNode* c : loop->children) {
    if (c->kind == NodeKind::kBooleanLiteral && c->text(src) == "true")
      return true;
    if (!c->leaf) break;  // first expression child is the condition
  }
  return false;
}

bool can_complete_normally(const SyntaxNode* stmt, std::string_view src) {
  switch (stmt->kind) {
    case NodeKind::kReturnStatement:
    case NodeKind::kThrowStatement:
    case NodeKind::kBreakStatement:
    case NodeKind::kContinueStatement:
      return false;
    case NodeKind::kBlock: {
      std::vector<const SyntaxNode*> stmts = block_statements(stmt);
      if (stmts.empty()) return true;
      return can_complete_normally(stmts.back(), src);
    }
    case NodeKind::kIfStatement: {
      // if without else always can; with else, either branch must.
      std::vector<const SyntaxNode*> branches;
      for (const SyntaxNode* c : stmt->children) {
        if (is_statement_kind(c->kind)) branches.push_back(c);
      }
      bool has_else = stmt->child_token(src, "else") != nullptr;
      if (!has_else || branches.size() < 2) return true;
      const SyntaxNode* then_branch = branches[branches.size() - 2];
      const SyntaxNode* else_branch = branches.back();
      return can_complete_normally(then_branch, src) ||
             can_complete_normally(else_branch, src);
    }
    case NodeKind::kWhileStatement:
    case NodeKind::kForStatement: {
      if (stmt->kind == NodeKind::kForStatement) {
        // for(;;) — no condition expression before the second ';'
        bool has_cond = false;
        int semis = 0;
        for (const SyntaxNode* c : stmt->children) {
          if (c->leaf && c->text(src) == ";") { ++semis; continue; }
          if (c->leaf && c->text(src) == ")") break;
          if (!c->leaf && semis == 1) has_cond = true;
        }
        if (has_cond) return true;
        return contains_break_token(stmt, src);
      }
      if (condition_is_literal_true(stmt, src))
        return contains_break_token(stmt, src);
      return true;
    }
    case NodeKind::kDoStatement: {
      if (condition_is_literal_true(stmt, src))
        return contains_break_token(stmt, src);
      return true;
    }
    case NodeKind::kSwitchStatement:
      return true;
    case NodeKind::kLabeledStatement: {
      for (const SyntaxNode* c : stmt->children) {
        if (is_statement_node(c)) return can_complete_normally(c, src);
      }
      return true;
    }
    case NodeKind::kSynchronizedStatement: {
      const SyntaxNode* body = stmt->first_child(NodeKind::kBlock);
      return body ? can_complete_normally(body, src) : true;
    }
    default:
      return true;
  }
}

struct InsertionPoint {
  std::size_t offset;
};

// Statement boundaries of a method body. `reachable_only` excludes
// positions directly after a statement execution cannot fall out of
// (inserting a statement there would be unreachable code).
std::vector<InsertionPoint> body_boundaries(const SyntaxNode* body,
                                            std::string_view src,
                                            bool reachable_only) {
  std::vector<InsertionPoint> points;
  std::vector<const SyntaxNode*> stmts = block_statements(body);
  const SyntaxNode* close = nullptr;
  for (auto it = body->children.rbegin(); it != body->children.rend(); ++it) {
    if ((*it)->leaf && (*it)->text(src) == "}") {
      close = *it;
      break;
    }
  }
  for (std::size_t i = 0; i < stmts.size(); ++i) {
    if (reachable_only && i > 0 && !can_complete_normally(stmts[i - 1], src))
      continue;
    points.push_back(InsertionPoint{stmts[i]->span.start});
  }
  // position after the last statement
  if (!reachable_only ||
      (stmts.empty() || can_complete_normally(stmts.back(), src))) {
    std::size_t off = close ? close->span.start
                            : (stmts.empty() ? body->span.end - 1
                                             : stmts.back()->span.end);
    points.push_back(InsertionPoint{off});
  }
  return points;
}

// Method and constructor bodies, in document order.
std::vector<const SyntaxNode*> method_bodies(const SyntaxTree& tree) {
  std::vector<const SyntaxNode*> out;
  for (NodeKind kind :
       {NodeKind::kMethodDeclaration, NodeKind::kConstructorDeclaration}) {
    for (const SyntaxNode* m : find_nodes(tree, kind)) {
      const SyntaxNode* body = m->first_child(NodeKind::kBlock);
      if (body) out.push_back(body);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SyntaxNode* a, const SyntaxNode* b) {
              return a->span.start < b->span.start;
            });
  return out;
}

std::string seeded_uuid(SplitMix64& rng) {
  unsigned char bytes[16];
  for (int half = 0; half < 2; ++half) {
    std::uint64_t v = rng.next();
    for (int i = 0; i < 8; ++i) {
      bytes[half * 8 + i] = static_cast<unsigned char>(v >> (8 * i));
    }
  }
  bytes[6] = static_cast<unsigned char>((bytes[6] & 0x0f) | 0x40);  // version 4
  bytes[8] = static_cast<unsigned char>((bytes[8] & 0x3f) | 0x80);  // variant
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(36);
  for (int i = 0; i < 16; ++i) {
    if (i == 4 || i == 6 || i == 8 || i == 10) out.push_back('-');
    out.push_back(digits[bytes[i] >> 4]);
    out.push_back(digits[bytes[i] & 0xf]);
  }
  return out;
}

}  // namespace

MrOutcome mr6_dummy_variable(const std::string& source, MrContext& ctx) {
  UnitView unit = internal::make_unit(source);
  std::string_view src = unit.source;
  std::vector<TextEdit> edits;
  std::unordered_set<std::string> assigned;

  std::size_t method_index = 0;
  for (const SyntaxNode* body : method_bodies(unit.tree)) {
    std::vector<InsertionPoint> points =
        body_boundaries(body, src, /*reachable_only=*/true);
    if (points.empty()) continue;
    SplitMix64 rng(mix_seed(ctx.seed, fnv1a64("mr6") + method_index));
    const InsertionPoint& at = points[rng.bounded(points.size())];
    std::string name = internal::fresh_name("dummyVar", "", ctx.dummy_counter,
                                            unit.identifiers, assigned);
    edits.push_back(
        TextEdit{Span{at.offset, at.offset}, "int " + name + " = 0;\n"});
    ++method_index;
  }
  return internal::finish(unit, std::move(edits));
}

MrOutcome mr7_adding_comments(const std::string& source, MrContext& ctx) {
  UnitView unit = internal::make_unit(source);
  std::string_view src = unit.source;
  std::vector<TextEdit> edits;

  std::size_t method_index = 0;
  for (const SyntaxNode* body : method_bodies(unit.tree)) {
    std::vector<InsertionPoint> points =
        body_boundaries(body, src, /*reachable_only=*/false);
    if (points.empty()) continue;
    SplitMix64 rng(mix_seed(ctx.seed, fnv1a64("mr7") + method_index));
    const InsertionPoint& at = points[rng.bounded(points.size())];
    std::string uuid = seeded_uuid(rng);
    edits.push_back(TextEdit{Span{at.offset, at.offset},
                             "//This method was modified -" + uuid + "\n"});
    ++method_index;
  }
  return internal::finish(unit, std::move(edits));
}

namespace {

// Identifier token equal to `name` anywhere inside `node`, restricted to
// spans strictly before `before` / outside `exclude`.
bool name_occurs(const SyntaxNode* node, std::string_view src,
                 std::string_view name, std::size_t before_offset) {
  bool found = false;
  walk(*node, [&](const SyntaxNode& n) {
    if (n.kind == NodeKind::kIdentifier && n.span.end <= before_offset &&
        n.text(src) == name)
      found = true;
  });
  return found;
}

bool name_occurs_outside(const SyntaxNode* node, std::string_view src,
                         std::string_view name, Span exclude) {
  bool found = false;
  walk(*node, [&](const SyntaxNode& n) {
    if (n.kind != NodeKind::kIdentifier || n.text(src) != name) return;
    if (n.span.start >= exclude.start && n.span.end <= exclude.end) return;
    found = true;
  });
  return found;
}

}  // namespace

MrOutcome mr8_variable_declaration(const std::string& source, MrContext& ctx) {
  (void)ctx;
  UnitView unit = internal::make_unit(source);
  std::string_view src = unit.source;
  std::vector<TextEdit> edits;

  for (const SyntaxNode* block : find_nodes(unit.tree, NodeKind::kBlock)) {
    std::vector<const SyntaxNode*> stmts = block_statements(block);
    if (stmts.empty()) continue;
    std::size_t block_top = stmts.front()->span.start;

    // declarator names of this block's declarations, with positions, for
    // the forward-reference guard
    std::vector<std::pair<std::string, std::size_t>> block_decl_names;
    for (const SyntaxNode* s : stmts) {
      if (s->kind != NodeKind::kLocalVariableDeclaration) continue;
      for (const SyntaxNode* d : s->children) {
        if (d->kind != NodeKind::kVariableDeclarator) continue;
        const SyntaxNode* name = d->first_child(NodeKind::kIdentifier);
        if (name)
          block_decl_names.emplace_back(std::string(name->text(src)),
                                        s->span.start);
      }
    }

    for (const SyntaxNode* decl : stmts) {
      if (decl->kind != NodeKind::kLocalVariableDeclaration) continue;

      std::vector<const SyntaxNode*> declarators;
      for (const SyntaxNode* d : decl->children) {
        if (d->kind == NodeKind::kVariableDeclarator) declarators.push_back(d);
      }
      if (declarators.size() != 1) continue;  // multi-declarator: leave as is
      const SyntaxNode* d = declarators.front();

      const SyntaxNode* type = decl->first_child(NodeKind::kType);
      if (!type || type->text(src) == "var") continue;

      const SyntaxNode* name_node = d->first_child(NodeKind::kIdentifier);
      const SyntaxNode* eq = d->child_token(src, "=");
      if (!name_node || !eq) continue;
      const SyntaxNode* init = d->children.back();
      if (init->kind == NodeKind::kArrayInitializer) continue;  // needs new T[]
      std::string name(name_node->text(src));

      // A name visible earlier in the block (e.g. a shadowed field use)
      // would be captured by the hoisted declaration.
      if (name_occurs(block, src, name, decl->span.start)) continue;

      // Initializer referencing a name this block declares further down.
      bool forward_ref = false;
      walk(*init, [&](const SyntaxNode& n) {
        if (n.kind != NodeKind::kIdentifier) return;
        std::string t(n.text(src));
        for (const auto& [other, pos] : block_decl_names) {
          if (other == t && pos > decl->span.start) forward_ref = true;
        }
      });
      if (forward_ref) continue;

      // "final int" — modifiers and annotations up to the type
      std::string head(src.substr(decl->span.start,
                                  type->span.end - decl->span.start));
      // name plus any C-style array dims before '='
      std::string name_dims(src.substr(name_node->span.start,
                                       eq->span.start - name_node->span.start));
      while (!name_dims.empty() && std::isspace(static_cast<unsigned char>(
                                       name_dims.back())))
        name_dims.pop_back();
      std::string init_text(init->text(src));

      edits.push_back(TextEdit{Span{block_top, block_top},
                               head + " " + name_dims + ";\n"});
      edits.push_back(
          TextEdit{decl->span, name + " = " + init_text + ";"});
    }
  }
  return internal::finish(unit, std::move(edits));
}

namespace {

struct ForParts {
  const SyntaxNode* init_decl = nullptr;
  std::vector<const SyntaxNode*> init_exprs;
  const SyntaxNode* condition = nullptr;
  std::vector<const SyntaxNode*> updates;
  const SyntaxNode* body = nullptr;
  bool well_formed = false;
};

ForParts dissect_for(const SyntaxNode* loop, std::string_view src) {
  ForParts parts;
  int semis = 0;
  bool in_header = false;
  bool header_done = false;
  for (const SyntaxNode* c : loop->children) {
    if (c->leaf) {
      std::string_view t = c->text(src);
      if (t == "(" && !header_done) in_header = true;
      else if (t == ")" && in_header) { in_header = false; header_done = true; }
      else if (t == ";" && in_header) ++semis;
      continue;
    }
    if (!in_header && header_done) {
      parts.body = c;
      continue;
    }
    if (!in_header) continue;
    if (semis == 0) {
      if (c->kind == NodeKind::kLocalVariableDeclaration) parts.init_decl = c;
      else parts.init_exprs.push_back(c);
    } else if (semis == 1) {
      parts.condition = c;
    } else {
      parts.updates.push_back(c);
    }
  }
  parts.well_formed = header_done && semis == 2 && parts.body != nullptr;
  return parts;
}

// Unlabeled continue that binds to this loop (not to a nested one).
bool has_loop_local_continue(const SyntaxNode* n, std::string_view src,
                             bool top) {
  if (!top) {
    switch (n->kind) {
      case NodeKind::kForStatement:
      case NodeKind::kEnhancedForStatement:
      case NodeKind::kWhileStatement:
      case NodeKind::kDoStatement:
      case NodeKind::kLambdaExpression:
      case NodeKind::kClassDeclaration:
      case NodeKind::kObjectCreation:
        return false;
      case NodeKind::kContinueStatement: {
        // labeled continue targets an enclosing labeled loop; relocating
        // this loop's update cannot be skipped by it
        for (const SyntaxNode* c : n->children) {
          if (c->kind == NodeKind::kIdentifier) return false;
        }
        return true;
      }
      default:
        break;
    }
  }
  for (const SyntaxNode* c : n->children) {
    if (has_loop_local_continue(c, src, false)) return true;
  }
  return false;
}

class Mr9Rewriter : public internal::Rewriter {
 public:
  explicit Mr9Rewriter(std::string_view src) : Rewriter(src) {}

 protected:
  bool transform(const SyntaxNode* n, std::string& out) override {
    if (n->kind != NodeKind::kForStatement) return false;
    if (n->parent && n->parent->kind == NodeKind::kLabeledStatement)
      return false;

    ForParts parts = dissect_for(n, src_);
    if (!parts.well_formed) return false;
    if (has_loop_local_continue(parts.body, src_, true)) return false;

    // Statements preceding the while loop.
    std::vector<std::string> init_stmts;
    std::vector<std::string> init_names;
    if (parts.init_decl) {
      init_stmts.push_back(render(parts.init_decl) + ";");
      for (const SyntaxNode* d : parts.init_decl->children) {
        if (d->kind != NodeKind::kVariableDeclarator) continue;
        const SyntaxNode* name = d->first_child(NodeKind::kIdentifier);
        if (name) init_names.emplace_back(name->text(src_));
      }
    }
    for (const SyntaxNode* e : parts.init_exprs)
      init_stmts.push_back(render(e) + ";");

    std::string update_text;
    for (const SyntaxNode* u : parts.updates) {
      if (!update_text.empty()) update_text += " ";
      update_text += render(u) + ";";
    }

    std::string cond_text =
        parts.condition ? render(parts.condition) : std::string("true");

    std::string body_text;
    if (parts.body->kind == NodeKind::kBlock) {
      body_text = render(parts.body);
      if (!update_text.empty()) {
        std::size_t brace = body_text.rfind('}');
        if (brace == std::string::npos) return false;
        std::string tail = update_text + "\n";
        body_text.insert(brace, tail);
      }
    } else if (parts.body->kind == NodeKind::kEmptyStatement) {
      body_text = "{ " + update_text + " }";
    } else {
      body_text = "{ " + render(parts.body) +
                  (update_text.empty() ? "" : " " + update_text) + " }";
    }

    std::string flat;
    for (const std::string& s : init_stmts) flat += s + "\n";
    flat += "while (" + cond_text + ") " + body_text;

    // Declarations hoisted out of the header leak into the enclosing
    // block; brace-wrap when that block is absent or already uses the name.
    bool needs_braces = false;
    if (!n->parent || n->parent->kind != NodeKind::kBlock) {
      needs_braces = true;
    } else {
      for (const std::string& name : init_names) {
        if (name_occurs_outside(n->parent, src_, name, n->span))
          needs_braces = true;
      }
    }
    out = needs_braces ? "{ " + flat + " }" : flat;
    return true;
  }
};

}  // namespace

MrOutcome mr9_for_to_while(const std::string& source, MrContext& ctx) {
  (void)ctx;
  UnitView unit = internal::make_unit(source);
  Mr9Rewriter rewriter(unit.source);
  std::vector<TextEdit> edits;
  rewriter.emit(&unit.tree.root(), edits);
  return internal::finish(unit, std::move(edits));
}

}  // namespace codemorph
