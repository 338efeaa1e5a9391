// Per-relation behavior: applicability edges, guards, counters,
// determinism and the parse-validity / rename invariants.

#include <gtest/gtest.h>

#include "codemorph/edits.hpp"
#include "codemorph/lexer.hpp"
#include "codemorph/mr.hpp"
#include "codemorph/parser.hpp"

namespace codemorph {
namespace {

MrOutcome apply(MrId id, const std::string& src, std::uint64_t seed = 0) {
  MrContext ctx;
  ctx.seed = seed;
  return apply_mr(id, src, ctx);
}

// ---- MR1 ------------------------------------------------------------

TEST(Mr1, CountersIncrementInDeclarationOrder) {
  MrOutcome out = apply(MrId::kVariableRenaming,
                        "int m(){ int x=1; int y=2; return x+y; }");
  EXPECT_TRUE(tokens_identical(
      out.text, "int m(){ int x_var1=1; int y_var2=2; return x_var1+y_var2; }"))
      << out.text;
}

TEST(Mr1, NoLocalsMeansNotApplied) {
  MrOutcome out = apply(MrId::kVariableRenaming, "void m(){ f(); }");
  EXPECT_FALSE(out.applied);
  EXPECT_EQ(out.edits_count, 0);
  EXPECT_TRUE(out.rename_map.empty());
}

TEST(Mr1, ParametersAreRenamedFieldsAreNot) {
  std::string src =
      "class A { int f; int m(int p){ return p + f; } }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  EXPECT_TRUE(tokens_identical(
      out.text, "class A { int f; int m(int p_var1){ return p_var1 + f; } }"))
      << out.text;
}

TEST(Mr1, ShadowedFieldResolvesToLocal) {
  std::string src = "class A { int v; void m(){ int v = 1; v++; } }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  EXPECT_TRUE(tokens_identical(
      out.text, "class A { int v; void m(){ int v_var1 = 1; v_var1++; } }"))
      << out.text;
}

TEST(Mr1, DistinctScopesGetDistinctNames) {
  std::string src = "void m(){ { int a = 1; a++; } { int a = 2; a--; } }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  EXPECT_TRUE(tokens_identical(
      out.text,
      "void m(){ { int a_var1 = 1; a_var1++; } { int a_var2 = 2; a_var2--; } }"))
      << out.text;
}

TEST(Mr1, CollisionWithExistingIdentifierIsSkipped) {
  // x_var1 already exists; the counter advances past it
  std::string src = "void m(){ int x = 1; int x_var1 = 2; use(x, x_var1); }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  SyntaxTree check = parse_java(out.text);
  EXPECT_FALSE(check.has_error_nodes());
  // injective, collision-free map
  std::vector<std::string> new_names;
  for (const RenameEntry& e : out.rename_map.variables) {
    EXPECT_EQ(std::count(new_names.begin(), new_names.end(), e.new_name), 0);
    new_names.push_back(e.new_name);
    EXPECT_EQ(src.find(" " + e.new_name + " "), std::string::npos);
  }
  EXPECT_NE(out.text.find("x_var2"), std::string::npos) << out.text;
}

TEST(Mr1, MethodNamesAndTypeNamesUntouched) {
  std::string src = "void m(){ int size = list.size(); String s = null; }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  // the call .size() keeps its name even though a local is named size
  EXPECT_NE(out.text.find("list.size()"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("int size_var1"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("String s_var2 = null"), std::string::npos) << out.text;
}

TEST(Mr1, StringLiteralsUntouched) {
  std::string src = "void m(){ int x = 1; log(\"x\"); use(x); }";
  MrOutcome out = apply(MrId::kVariableRenaming, src);
  EXPECT_NE(out.text.find("\"x\""), std::string::npos);
  EXPECT_NE(out.text.find("use(x_var1)"), std::string::npos) << out.text;
}

// ---- MR2 ------------------------------------------------------------

TEST(Mr2, MainIsExcluded) {
  MrOutcome out =
      apply(MrId::kMethodRenaming, "public static void main(String[] a){}");
  EXPECT_FALSE(out.applied);
}

TEST(Mr2, ConstructorOnlyClassNotApplied) {
  MrOutcome out =
      apply(MrId::kMethodRenaming, "class A { A(int x){ this.x = x; } int x; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr2, OverridesAndBodilessDeclarationsKeepTheirNames) {
  std::string src =
      "interface S { int area(); }\n"
      "class Sq implements S { @Override public int area() { return 4; } "
      "int helper() { return area(); } }";
  MrOutcome out = apply(MrId::kMethodRenaming, src);
  EXPECT_TRUE(out.applied);
  // area keeps its name on both sides; helper is renamed
  EXPECT_NE(out.text.find("int area()"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("helperMethod1"), std::string::npos) << out.text;
  EXPECT_EQ(out.text.find("areaMethod"), std::string::npos) << out.text;
}

TEST(Mr2, OverloadsShareOneNewName) {
  std::string src =
      "int f(int a){ return a; } int f(long b){ return 1; } "
      "int g(){ return f(1); }";
  MrOutcome out = apply(MrId::kMethodRenaming, src);
  EXPECT_TRUE(out.applied);
  EXPECT_EQ(out.rename_map.methods.size(), 2u);  // f and g
  // both declarations of f share the same new name
  std::string f_new;
  for (const RenameEntry& e : out.rename_map.methods) {
    if (e.old_name == "f") f_new = e.new_name;
  }
  ASSERT_FALSE(f_new.empty());
  std::size_t first = out.text.find("int " + f_new + "(int a)");
  std::size_t second = out.text.find("int " + f_new + "(long b)");
  EXPECT_NE(first, std::string::npos) << out.text;
  EXPECT_NE(second, std::string::npos) << out.text;
  EXPECT_NE(out.text.find(f_new + "(1)"), std::string::npos) << out.text;
}

TEST(Mr2, QualifiedCallsOnOtherObjectsUntouched) {
  std::string src =
      "class A { int size(){ return 0; } int m(java.util.List l){ "
      "return l.size() + size() + this.size(); } }";
  MrOutcome out = apply(MrId::kMethodRenaming, src);
  EXPECT_NE(out.text.find("l.size()"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("sizeMethod1() + this.sizeMethod1()"),
            std::string::npos)
      << out.text;
}

// ---- MR3 ------------------------------------------------------------

TEST(Mr3, CommutativeSecondForm) {
  MrOutcome out = apply(MrId::kAssignExpression,
                        "void m(int x, int y){ x = y * x; }");
  EXPECT_TRUE(tokens_identical(out.text, "void m(int x, int y){ x *= y; }"))
      << out.text;
}

TEST(Mr3, NonCommutativeSecondFormSkipped) {
  MrOutcome out = apply(MrId::kAssignExpression,
                        "void m(int x, int y){ x = y - x; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr3, TargetNotAnOperandSkipped) {
  MrOutcome out = apply(MrId::kAssignExpression,
                        "void m(int x, int y, int z){ x = y + z; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr3, StringTypedTargetSkipped) {
  MrOutcome out = apply(MrId::kAssignExpression,
                        "void m(String s, String t){ s = s + t; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr3, EffectfulOtherOperandOnlyInLeftForm) {
  // x = x + f() keeps evaluation order under x += f()
  MrOutcome left = apply(MrId::kAssignExpression, "void m(int x){ x = x + f(); }");
  EXPECT_TRUE(left.applied);
  // x = f() * x would reorder the call after the read; skipped
  MrOutcome right = apply(MrId::kAssignExpression, "void m(int x){ x = f() * x; }");
  EXPECT_FALSE(right.applied);
}

TEST(Mr3, AllOccurrencesRewritten) {
  std::string src =
      "void m(int a, int b){ a = a + 1; b = b * 2; a = a - b; }";
  MrOutcome out = apply(MrId::kAssignExpression, src);
  EXPECT_EQ(out.edits_count, 3);
  // exhaustiveness: a second pass finds nothing left to rewrite
  MrOutcome again = apply(MrId::kAssignExpression, out.text);
  EXPECT_FALSE(again.applied);
}

// ---- MR4 ------------------------------------------------------------

TEST(Mr4, LessThanSwaps) {
  MrOutcome out =
      apply(MrId::kConditionalExpression, "void m(int a, int b){ if (a < b) x(); }");
  EXPECT_TRUE(tokens_identical(out.text, "void m(int a, int b){ if (b > a) x(); }"))
      << out.text;
}

TEST(Mr4, CallOperandsAreNotSwapped) {
  MrOutcome out =
      apply(MrId::kConditionalExpression, "void m(){ if (f() > 0) x(); }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr4, AlreadyParenthesizedBooleanNotDoubleWrapped) {
  MrOutcome out = apply(MrId::kConditionalExpression,
                        "void m(boolean p, boolean q){ boolean r = (p && q); }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr4, BooleanOperatorsGetOneParenPair) {
  MrOutcome out = apply(MrId::kConditionalExpression,
                        "void m(boolean p, boolean q){ while (p || q) step(); }");
  EXPECT_TRUE(
      tokens_identical(out.text, "void m(boolean p, boolean q){ while ((p || q)) step(); }"))
      << out.text;
}

// ---- MR5 ------------------------------------------------------------

TEST(Mr5, SubtractionBecomesNegatedAddition) {
  MrOutcome out = apply(MrId::kBinaryExpression,
                        "void m(int a, int b){ int y = a - b; }");
  EXPECT_TRUE(tokens_identical(out.text, "void m(int a, int b){ int y = a + (-b); }"))
      << out.text;
}

TEST(Mr5, StringConcatenationExcluded) {
  MrOutcome out =
      apply(MrId::kBinaryExpression, "void m(String t){ String r = \"s\" + t; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr5, UnknownTypesAreNotSwapped) {
  // a and b resolve to nothing in this unit: '+' could be concatenation
  MrOutcome out = apply(MrId::kBinaryExpression, "class C { Object m(){ return a + b; } }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr5, IntegerDivisionUntouched) {
  MrOutcome out = apply(MrId::kBinaryExpression, "void m(){ int q = 5 / 2; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr5, FloatingDivisionRewritten) {
  MrOutcome out = apply(MrId::kBinaryExpression,
                        "void m(double a, int b){ double r = a / b; }");
  EXPECT_TRUE(tokens_identical(out.text,
                               "void m(double a, int b){ double r = a * (1.0 / b); }"))
      << out.text;
}

TEST(Mr5, NegatedOperandKeepsASpace) {
  MrOutcome out = apply(MrId::kBinaryExpression,
                        "void m(int a){ int y = a - -1; }");
  EXPECT_TRUE(out.applied);
  // "a + (- -1)" must not lex as a pre-decrement
  SyntaxTree check = parse_java(out.text);
  EXPECT_FALSE(check.has_error_nodes()) << out.text;
  EXPECT_EQ(out.text.find("--"), std::string::npos) << out.text;
}

TEST(Mr5, ComplexRightOperandOfMinusIsParenthesized) {
  MrOutcome out = apply(MrId::kBinaryExpression,
                        "void m(int a, int b, int c){ int y = a - b % c; }");
  EXPECT_TRUE(tokens_identical(
      out.text, "void m(int a, int b, int c){ int y = a + (-(b % c)); }"))
      << out.text;
}

TEST(Mr5, NestedExpressionsAllRewritten) {
  MrOutcome out = apply(MrId::kBinaryExpression,
                        "void m(int a, int b, int c){ int y = a * b + c; }");
  // inner a*b swaps, outer + swaps with the rewritten operand
  EXPECT_TRUE(tokens_identical(
      out.text, "void m(int a, int b, int c){ int y = c + b * a; }"))
      << out.text;
}

// ---- MR6 ------------------------------------------------------------

TEST(Mr6, InterfaceHasNoBodiesNotApplied) {
  MrOutcome out = apply(MrId::kDummyVariable, "interface I { void m(); }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr6, TwoMethodsGetSequentialCounters) {
  MrOutcome out = apply(MrId::kDummyVariable,
                        "void a(){ x(); }\nvoid b(){ y(); }", /*seed=*/3);
  EXPECT_NE(out.text.find("int dummyVar1 = 0;"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("int dummyVar2 = 0;"), std::string::npos) << out.text;
  EXPECT_LT(out.text.find("dummyVar1"), out.text.find("dummyVar2"));
}

TEST(Mr6, NeverInsertsAfterReturn) {
  // the only reachable boundary is before the return
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    MrOutcome out =
        apply(MrId::kDummyVariable, "int m(){ return 1; }", seed);
    EXPECT_TRUE(tokens_identical(out.text,
                                 "int m(){ int dummyVar1 = 0; return 1; }"))
        << out.text;
  }
}

TEST(Mr6, SeededPositionIsDeterministic) {
  std::string src = "void m(){ a(); b(); c(); }";
  MrOutcome first = apply(MrId::kDummyVariable, src, 42);
  MrOutcome second = apply(MrId::kDummyVariable, src, 42);
  EXPECT_EQ(first.text, second.text);
}

// ---- MR7 ------------------------------------------------------------

TEST(Mr7, EmptyBodyGetsSoleComment) {
  MrOutcome out = apply(MrId::kAddingComments, "void m(){}");
  EXPECT_TRUE(out.applied);
  EXPECT_NE(out.text.find("//This method was modified -"), std::string::npos);
  SyntaxTree check = parse_java(out.text);
  EXPECT_FALSE(check.has_error_nodes()) << out.text;
}

TEST(Mr7, UuidIsRfc4122Shaped) {
  MrOutcome out = apply(MrId::kAddingComments, "void m(){ a(); }", 9);
  std::size_t pos = out.text.find("modified -");
  ASSERT_NE(pos, std::string::npos);
  std::string uuid = out.text.substr(pos + 10, 36);
  ASSERT_EQ(uuid.size(), 36u);
  EXPECT_EQ(uuid[8], '-');
  EXPECT_EQ(uuid[13], '-');
  EXPECT_EQ(uuid[14], '4');  // version
  EXPECT_EQ(uuid[18], '-');
  EXPECT_TRUE(uuid[19] == '8' || uuid[19] == '9' || uuid[19] == 'a' ||
              uuid[19] == 'b');  // variant
  EXPECT_EQ(uuid[23], '-');
}

TEST(Mr7, SameSeedSameOutput) {
  std::string src = "void m(){ a(); b(); }";
  EXPECT_EQ(apply(MrId::kAddingComments, src, 7).text,
            apply(MrId::kAddingComments, src, 7).text);
  EXPECT_NE(apply(MrId::kAddingComments, src, 7).text,
            apply(MrId::kAddingComments, src, 8).text);
}

// ---- MR8 ------------------------------------------------------------

TEST(Mr8, NoInitializerNotApplied) {
  MrOutcome out = apply(MrId::kVariableDeclaration, "void m(){ int x; }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr8, NearestEnclosingBlockIsTheHoistTarget) {
  MrOutcome out = apply(MrId::kVariableDeclaration,
                        "void m(boolean c){ while(c){ int t = g(); use(t); } }");
  EXPECT_TRUE(tokens_identical(
      out.text, "void m(boolean c){ while(c){ int t; t = g(); use(t); } }"))
      << out.text;
}

TEST(Mr8, ForHeaderDeclarationsUntouched) {
  MrOutcome out = apply(MrId::kVariableDeclaration,
                        "void m(){ for (int i = 0; i < 3; i++) { use(i); } }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr8, ArrayInitializerSkipped) {
  MrOutcome out = apply(MrId::kVariableDeclaration,
                        "void m(){ int[] a = {1, 2}; use(a); }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr8, EarlierNameUseBlocksHoist) {
  // x is assigned (a field) before the local declaration; hoisting would
  // capture that assignment
  std::string src = "class A { int x; void m(){ x = 5; int x = 3; use(x); } }";
  MrOutcome out = apply(MrId::kVariableDeclaration, src);
  EXPECT_FALSE(out.applied);
}

TEST(Mr8, ModifiersTravelWithTheDeclaration) {
  MrOutcome out = apply(MrId::kVariableDeclaration,
                        "void m(){ foo(); final int x = 5; use(x); }");
  EXPECT_TRUE(tokens_identical(
      out.text, "void m(){ final int x; foo(); x = 5; use(x); }"))
      << out.text;
}

TEST(Mr8, MultipleDeclarationsHoistInOrder) {
  MrOutcome out = apply(MrId::kVariableDeclaration,
                        "void m(){ f(); int a = 1; int b = 2; }");
  EXPECT_TRUE(tokens_identical(out.text,
                               "void m(){ int a; int b; f(); a = 1; b = 2; }"))
      << out.text;
}

// ---- MR9 ------------------------------------------------------------

TEST(Mr9, InfiniteForBecomesWhileTrue) {
  MrOutcome out = apply(MrId::kForToWhileLoop, "void m(){ for(;;) {} }");
  EXPECT_TRUE(tokens_identical(out.text, "void m(){ while (true) {} }"))
      << out.text;
}

TEST(Mr9, ContinueBoundLoopSkipped) {
  MrOutcome out = apply(
      MrId::kForToWhileLoop,
      "void m(int n){ for(int i=0;i<n;i++){ if(p(i)) continue; s(i); } }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr9, ContinueInNestedLoopDoesNotBlockOuter) {
  std::string src =
      "void m(int n){ for (int i = 0; i < n; i++) { "
      "while (q()) { continue; } s(i); } }";
  MrOutcome out = apply(MrId::kForToWhileLoop, src);
  EXPECT_TRUE(out.applied);
  EXPECT_NE(out.text.find("while (i < n)"), std::string::npos) << out.text;
}

TEST(Mr9, LabeledLoopSkipped) {
  MrOutcome out = apply(
      MrId::kForToWhileLoop,
      "void m(){ outer: for (int i = 0; i < 3; i++) { break outer; } }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr9, EnhancedForSkipped) {
  MrOutcome out = apply(MrId::kForToWhileLoop,
                        "void m(int[] xs){ for (int x : xs) { use(x); } }");
  EXPECT_FALSE(out.applied);
}

TEST(Mr9, SingleStatementBodyGetsBraces) {
  MrOutcome out = apply(MrId::kForToWhileLoop,
                        "void m(){ for (int i = 0; i < 3; i++) s(i); }");
  EXPECT_TRUE(tokens_identical(
      out.text, "void m(){ int i = 0; while (i < 3) { s(i); i++; } }"))
      << out.text;
}

TEST(Mr9, SingleStatementContextIsBraceWrapped) {
  std::string src = "void m(boolean c){ if (c) for (int i = 0; i < 3; i++) s(i); }";
  MrOutcome out = apply(MrId::kForToWhileLoop, src);
  EXPECT_TRUE(out.applied);
  EXPECT_TRUE(tokens_identical(
      out.text,
      "void m(boolean c){ if (c) { int i = 0; while (i < 3) { s(i); i++; } } }"))
      << out.text;
}

TEST(Mr9, NameCollisionForcesBraces) {
  std::string src =
      "void m(){ for (int i = 0; i < 3; i++) { s(i); } int i = 9; use(i); }";
  MrOutcome out = apply(MrId::kForToWhileLoop, src);
  EXPECT_TRUE(out.applied);
  EXPECT_TRUE(tokens_identical(
      out.text,
      "void m(){ { int i = 0; while (i < 3) { s(i); i++; } } int i = 9; use(i); }"))
      << out.text;
}

TEST(Mr9, MultipleInitAndUpdateExpressions) {
  std::string src =
      "void m(int n){ int i; int j; for (i = 0, j = n; i < j; i++, j--) { s(); } }";
  MrOutcome out = apply(MrId::kForToWhileLoop, src);
  EXPECT_TRUE(tokens_identical(
      out.text,
      "void m(int n){ int i; int j; i = 0; j = n; while (i < j) { s(); i++; j--; } }"))
      << out.text;
}

TEST(Mr9, NestedLoopsBothTransformed) {
  std::string src =
      "void m(){ for (int i = 0; i < 2; i++) { for (int j = 0; j < 2; j++) { "
      "s(i, j); } } }";
  MrOutcome out = apply(MrId::kForToWhileLoop, src);
  EXPECT_TRUE(out.applied);
  EXPECT_EQ(out.text.find("for"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("while (i < 2)"), std::string::npos) << out.text;
  EXPECT_NE(out.text.find("while (j < 2)"), std::string::npos) << out.text;
  SyntaxTree check = parse_java(out.text);
  EXPECT_FALSE(check.has_error_nodes()) << out.text;
}

// ---- cross-cutting invariants ----------------------------------------

const char* kRichFixture =
    "class Fixture {\n"
    "  int helper(int value) { return value + 1; }\n"
    "\n"
    "  void run(int seedIn) {\n"
    "    int acc = 0;\n"
    "    for (int i = 0; i < 3; i++) {\n"
    "      acc = acc + i;\n"
    "    }\n"
    "    int prod = 2 * 3;\n"
    "    if (acc > 0 && prod > 1) {\n"
    "      acc = helper(acc);\n"
    "    }\n"
    "  }\n"
    "}\n";

TEST(MrInvariants, AppliedMatchesTextDiffers) {
  for (MrId id : all_mrs()) {
    MrOutcome out = apply(id, kRichFixture, 5);
    EXPECT_EQ(out.applied, text_differs(kRichFixture, out.text)) << mr_name(id);
    EXPECT_EQ(out.edits_count == 0, !out.applied) << mr_name(id);
  }
}

TEST(MrInvariants, DeterministicPerSeed) {
  for (MrId id : all_mrs()) {
    MrOutcome a = apply(id, kRichFixture, 1234);
    MrOutcome b = apply(id, kRichFixture, 1234);
    EXPECT_EQ(a.text, b.text) << mr_name(id);
    EXPECT_EQ(a.edits_count, b.edits_count) << mr_name(id);
  }
}

TEST(MrInvariants, ParseValidityPreserved) {
  SyntaxTree original = parse_java(kRichFixture);
  ASSERT_FALSE(original.has_error_nodes());
  for (MrId id : all_mrs()) {
    MrOutcome out = apply(id, kRichFixture, 99);
    ASSERT_TRUE(out.applied) << mr_name(id);
    SyntaxTree tree = parse_java(out.text);
    EXPECT_FALSE(tree.has_error_nodes())
        << mr_name(id) << "\n" << out.text;
  }
}

TEST(MrInvariants, RenameMapsInjectiveAndCollisionFree) {
  for (MrId id : {MrId::kVariableRenaming, MrId::kMethodRenaming}) {
    MrOutcome out = apply(id, kRichFixture, 3);
    std::vector<std::string> seen;
    auto check = [&](const std::vector<RenameEntry>& entries) {
      for (const RenameEntry& e : entries) {
        EXPECT_EQ(std::count(seen.begin(), seen.end(), e.new_name), 0)
            << e.new_name;
        seen.push_back(e.new_name);
        // never collides with an identifier of the original source
        for (const Token& t : lex_java(kRichFixture)) {
          if (t.kind == TokenKind::kIdentifier) {
            EXPECT_NE(slice(kRichFixture, t.span), e.new_name);
          }
        }
      }
    };
    check(out.rename_map.variables);
    check(out.rename_map.methods);
  }
}

TEST(MrInvariants, DispatchPropagatesOnlyParseFatal) {
  MrContext ctx;
  EXPECT_THROW(apply_mr(MrId::kVariableRenaming, "", ctx), ParseFatal);
  EXPECT_THROW(apply_mr(static_cast<MrId>(12), "int x;", ctx), RangeError);
}

TEST(MrIdHelpers, CodesAndNames) {
  EXPECT_EQ(mr_code(MrId::kForToWhileLoop), "m9");
  EXPECT_EQ(mr_name(MrId::kAssignExpression), "AssignExpression");
  EXPECT_EQ(mr_from_code("m3"), MrId::kAssignExpression);
  EXPECT_EQ(mr_from_code("VariableRenaming"), MrId::kVariableRenaming);
  EXPECT_FALSE(mr_from_code("m0").has_value());
  EXPECT_FALSE(mr_from_code("m10").has_value());
  EXPECT_EQ(all_mrs().size(), 9u);
}

}  // namespace
}  // namespace codemorph
