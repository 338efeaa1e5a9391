// The nine golden transformations, asserted byte-exact modulo whitespace
// (token-sequence equality).

#include <gtest/gtest.h>

#include <chrono>

#include "codemorph/lexer.hpp"
#include "codemorph/mr.hpp"

namespace codemorph {
namespace {

// "Byte-exact modulo whitespace": every non-whitespace token, comments
// included, must match in order.
std::vector<std::string> tokens_keeping_comments(std::string_view src) {
  std::vector<std::string> out;
  for (const Token& t : lex_java(src)) {
    if (t.kind == TokenKind::kWhitespace) continue;
    out.emplace_back(slice(src, t.span));
  }
  return out;
}

void expect_golden(MrId id, const std::string& input,
                   const std::string& expected, std::uint64_t seed = 0) {
  MrContext ctx;
  ctx.seed = seed;
  MrOutcome out = apply_mr(id, input, ctx);
  EXPECT_TRUE(out.applied) << mr_name(id);
  EXPECT_EQ(tokens_keeping_comments(out.text), tokens_keeping_comments(expected))
      << mr_name(id) << "\n got: " << out.text << "\nwant: " << expected;
}

TEST(GoldenMrSuite, AllNineRules) {
  auto start = std::chrono::steady_clock::now();

  // m1: variable renaming covers declarations and uses
  expect_golden(MrId::kVariableRenaming, "void m(){ int x = 1; x++; }",
                "void m(){ int x_var1 = 1; x_var1++; }");

  // m2: method renaming updates call sites in the unit
  expect_golden(MrId::kMethodRenaming,
                "int calculate() { return 0; }\n"
                "int use() { return calculate(); }",
                "int calculateMethod1() { return 0; }\n"
                "int useMethod2() { return calculateMethod1(); }");

  // m3: direct assignment becomes compound assignment
  expect_golden(MrId::kAssignExpression, "void m(int x, int y){ x = x + y; }",
                "void m(int x, int y){ x += y; }");

  // m4: comparison operands swap with a flipped operator
  expect_golden(MrId::kConditionalExpression,
                "void m(int a){ if (a > 0) { a = 1; } }",
                "void m(int a){ if (0 < a) { a = 1; } }");

  // m5: commutative '+' swaps its operands
  expect_golden(MrId::kBinaryExpression,
                "void m(int a, int b){ int x = a + b; }",
                "void m(int a, int b){ int x = b + a; }");

  // m6: dummy declaration at a seeded statement boundary (seed 0: after)
  expect_golden(MrId::kDummyVariable, "void m(){ int x = 1; }",
                "void m(){ int x = 1; int dummyVar1 = 0; }", /*seed=*/0);

  // m7: marker comment with a seeded RFC-4122 UUID (seed 1: after)
  expect_golden(
      MrId::kAddingComments, "void m(){ int x = 1; }",
      "void m(){ int x = 1; //This method was modified "
      "-bbc8fc65-0e54-4175-ba00-27d4ce634995\n}",
      /*seed=*/1);

  // m8: declaration hoists to the top of its block, assignment stays
  expect_golden(MrId::kVariableDeclaration,
                "void method() { foo(); int x = 5; }",
                "void method() { int x; foo(); x = 5; }");

  // m9: basic for-loop becomes init; while(cond){ body; update; }
  expect_golden(MrId::kForToWhileLoop,
                "void m(){ for (int i = 0; i < 10; i++) { x(); } }",
                "void m(){ int i = 0; while (i < 10) { x(); i++; } }");

  auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_LT(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count(),
            1000);
}

// Comment tokens differ from code tokens; the m7 golden needs the comment
// preserved under token comparison, so double-check the raw text too.
TEST(GoldenMrSuite, CommentTextIsExact) {
  MrContext ctx;
  ctx.seed = 1;
  MrOutcome out = mr7_adding_comments("void m(){ int x = 1; }", ctx);
  EXPECT_NE(out.text.find("//This method was modified "
                          "-bbc8fc65-0e54-4175-ba00-27d4ce634995"),
            std::string::npos)
      << out.text;
}

}  // namespace
}  // namespace codemorph
