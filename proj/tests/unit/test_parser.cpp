#include "codemorph/parser.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "codemorph/errors.hpp"

namespace codemorph {
namespace {

void check_span_invariants(const SyntaxNode& node, std::string_view src) {
  ASSERT_LE(node.span.start, node.span.end);
  ASSERT_LE(node.span.end, src.size());
  std::size_t cursor = node.span.start;
  for (const SyntaxNode* child : node.children) {
    // children nest inside the parent and siblings are ordered,
    // non-overlapping
    ASSERT_GE(child->span.start, cursor);
    ASSERT_LE(child->span.end, node.span.end);
    ASSERT_EQ(child->parent, &node);
    cursor = child->span.end;
    check_span_invariants(*child, src);
  }
}

TEST(ParseJava, BareMethodIdentityRender) {
  std::string src = "int f(){return 1;}";
  SyntaxTree tree = parse_java(src);
  EXPECT_EQ(tree.render(), src);
  auto methods = find_nodes(tree, NodeKind::kMethodDeclaration);
  ASSERT_EQ(methods.size(), 1u);
  EXPECT_EQ(methods[0]->span, (Span{0, src.size()}));
  EXPECT_FALSE(tree.has_error_nodes());
}

TEST(ParseJava, EmptyInputIsFatal) {
  EXPECT_THROW(parse_java(""), ParseFatal);
  EXPECT_THROW(parse_java("   \n\t  "), ParseFatal);
  EXPECT_THROW(parse_java("// only a comment"), ParseFatal);
}

TEST(ParseJava, ForStatementStructure) {
  std::string src = "void m(){ for (int i = 0; i < 10; i++) { x(); } }";
  SyntaxTree tree = parse_java(src);
  auto fors = find_nodes(tree, NodeKind::kForStatement);
  ASSERT_EQ(fors.size(), 1u);
  const SyntaxNode* loop = fors[0];
  // init / cond / update children
  EXPECT_NE(loop->first_child(NodeKind::kLocalVariableDeclaration), nullptr);
  EXPECT_NE(loop->first_child(NodeKind::kBinaryExpression), nullptr);
  EXPECT_NE(loop->first_child(NodeKind::kPostfixExpression), nullptr);
  EXPECT_NE(loop->first_child(NodeKind::kBlock), nullptr);
  EXPECT_FALSE(tree.has_error_nodes());
}

TEST(ParseJava, CompilationUnitNotWrapped) {
  std::string src = "package p;\nimport java.util.List;\nclass A { int x; }\n";
  SyntaxTree tree = parse_java(src);
  EXPECT_FALSE(tree.wrapped());
  EXPECT_EQ(tree.render(), src);
  EXPECT_EQ(find_nodes(tree, NodeKind::kClassDeclaration).size(), 1u);
}

TEST(ParseJava, ClassFragmentIsWrapped) {
  std::string src = "int f(){ return 1; }\nint g(){ return f(); }";
  SyntaxTree tree = parse_java(src);
  EXPECT_TRUE(tree.wrapped());
  EXPECT_EQ(tree.render(), src);
  EXPECT_EQ(find_nodes(tree, NodeKind::kMethodDeclaration).size(), 2u);
}

TEST(ParseJava, ErrorRecoveryKeepsGoing) {
  std::string src = "void m(){ @@@ ; int x = 1; }";
  SyntaxTree tree = parse_java(src);
  EXPECT_TRUE(tree.has_error_nodes());
  EXPECT_EQ(tree.render(), src);
  // the well-formed declaration after the junk still parses
  EXPECT_EQ(find_nodes(tree, NodeKind::kLocalVariableDeclaration).size(), 1u);
}

TEST(ParseJava, SpanInvariants) {
  const char* sources[] = {
      "int f(){return 1;}",
      "class A { int x = 1; void m(int p){ for(int i=0;i<p;i++){ x += i; } } }",
      "void m(){ try (java.io.Reader r = open()) { use(r); } catch (Exception e) { log(e); } finally { done(); } }",
      "class B { enum E { A, B; int v(){ return 1; } } }",
      "void m(){ java.util.List<java.util.List<String>> xs = null; xs.get(0); }",
      "void m(){ Runnable r = () -> { int q = 1; q++; }; int[] a = new int[]{1,2}; a[0] = a[1]; }",
      "void m(int x){ switch (x) { case 1: x++; break; default: x--; } }",
      "void m(){ label: for(;;) { break label; } }",
      "void m(double d){ long v = (long) d; Object o = (Object) null; }",
      "void m(){ int x = a ? b : c; boolean t = this instanceof Object; }",
  };
  for (const char* src : sources) {
    SyntaxTree tree = parse_java(src);
    check_span_invariants(tree.root(), tree.source());
    EXPECT_EQ(tree.render(), src) << src;
  }
}

TEST(FindNodes, DocumentOrderNoDuplicates) {
  std::string src =
      "void m(){ for(int i=0;i<2;i++){ for(int j=0;j<2;j++){ x(); } } }";
  SyntaxTree tree = parse_java(src);
  auto fors = find_nodes(tree, NodeKind::kForStatement);
  ASSERT_EQ(fors.size(), 2u);
  EXPECT_LT(fors[0]->span.start, fors[1]->span.start);  // outer first
  EXPECT_TRUE(fors[0]->span.contains(fors[1]->span));
  for (std::size_t i = 1; i < fors.size(); ++i) {
    EXPECT_LE(fors[i - 1]->span.start, fors[i]->span.start);
    EXPECT_NE(fors[i - 1], fors[i]);
  }
}

TEST(FindNodes, SingleMethod) {
  SyntaxTree tree = parse_java("int f(){}");
  EXPECT_EQ(find_nodes(tree, NodeKind::kMethodDeclaration).size(), 1u);
  EXPECT_EQ(find_nodes(tree, "method_declaration").size(), 1u);
  EXPECT_EQ(find_nodes(tree, "no_such_kind").size(), 0u);
}

TEST(KindNames, RoundTrip) {
  for (int k = 0; k <= static_cast<int>(NodeKind::kError); ++k) {
    NodeKind kind = static_cast<NodeKind>(k);
    auto back = kind_from_name(kind_name(kind));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, kind);
  }
}

// Round trip over the bundled corpus: rendering an unedited tree
// reproduces every corpus file byte-for-byte.
TEST(ParseJava, CorpusRoundTrip) {
  const char* corpus_env = std::getenv("CODEMORPH_CORPUS_DIR");
  ASSERT_NE(corpus_env, nullptr) << "CODEMORPH_CORPUS_DIR not set";
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_env)) {
    if (entry.path().extension() != ".java") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string src(std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>{});
    SyntaxTree tree = parse_java(src);
    EXPECT_EQ(tree.render(), src) << entry.path();
    EXPECT_FALSE(tree.has_error_nodes()) << entry.path();
    check_span_invariants(tree.root(), tree.source());
    ++files;
  }
  EXPECT_GE(files, 25);
}

}  // namespace
}  // namespace codemorph
