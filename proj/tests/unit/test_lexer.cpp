#include "codemorph/lexer.hpp"

#include <gtest/gtest.h>

namespace codemorph {
namespace {

std::vector<std::string> texts(std::string_view src) { return token_texts(src); }

TEST(Lexer, TokensTileTheInput) {
  std::string src = "int x = 1; // note\n/* block */ String s = \"a\\\"b\";";
  std::size_t cursor = 0;
  for (const Token& t : lex_java(src)) {
    EXPECT_EQ(t.span.start, cursor);
    cursor = t.span.end;
  }
  EXPECT_EQ(cursor, src.size());
}

TEST(Lexer, CommentsAndStringsAreSingleTokens) {
  auto toks = lex_java("// x + y\n\"a + b\" '+' /* z */");
  int comments = 0, strings = 0, chars = 0;
  for (const Token& t : toks) {
    if (t.kind == TokenKind::kLineComment || t.kind == TokenKind::kBlockComment)
      ++comments;
    if (t.kind == TokenKind::kStringLiteral) ++strings;
    if (t.kind == TokenKind::kCharLiteral) ++chars;
  }
  EXPECT_EQ(comments, 2);
  EXPECT_EQ(strings, 1);
  EXPECT_EQ(chars, 1);
}

TEST(Lexer, NumericLiterals) {
  auto t = texts("0x1F 0b1010 1_000 3.14 2e10 1.5f 7L .5");
  EXPECT_EQ(t, (std::vector<std::string>{"0x1F", "0b1010", "1_000", "3.14",
                                         "2e10", "1.5f", "7L", ".5"}));
  auto toks = lex_java("3.14 7L");
  EXPECT_EQ(toks[0].kind, TokenKind::kFloatLiteral);
  EXPECT_EQ(toks[2].kind, TokenKind::kIntLiteral);
}

TEST(Lexer, GreaterThanNeverFuses) {
  auto t = texts("a >> b >>> c >= d >>= e");
  // '>' stays single so List<List<String>> closes cleanly
  EXPECT_EQ(t, (std::vector<std::string>{"a", ">", ">", "b", ">", ">", ">",
                                         "c", ">", "=", "d", ">", ">", "=",
                                         "e"}));
}

TEST(Lexer, CompoundOperators) {
  auto t = texts("a += b; c <<= d; e && f; g -> h; i::j");
  EXPECT_EQ(t, (std::vector<std::string>{"a", "+=", "b", ";", "c", "<<=", "d",
                                         ";", "e", "&&", "f", ";", "g", "->",
                                         "h", ";", "i", "::", "j"}));
}

TEST(Lexer, KeywordsVsIdentifiers) {
  EXPECT_TRUE(is_java_keyword("while"));
  EXPECT_TRUE(is_java_keyword("instanceof"));
  EXPECT_FALSE(is_java_keyword("whileLoop"));
  EXPECT_FALSE(is_java_keyword("var"));    // contextual
  EXPECT_FALSE(is_java_keyword("record")); // contextual
}

TEST(Lexer, TokensIdenticalIgnoresWhitespaceAndComments) {
  EXPECT_TRUE(tokens_identical("int  x=1;", "int x = 1;"));
  EXPECT_TRUE(tokens_identical("int x = 1; // c", "int x = 1;"));
  EXPECT_FALSE(tokens_identical("int x = 1;", "int y = 1;"));
}

TEST(Lexer, TextBlock) {
  std::string src = "String s = \"\"\"\nhello \"world\"\n\"\"\";";
  auto toks = lex_java(src);
  bool has_text_block = false;
  for (const Token& t : toks) {
    if (t.kind == TokenKind::kTextBlock) has_text_block = true;
  }
  EXPECT_TRUE(has_text_block);
}

}  // namespace
}  // namespace codemorph
