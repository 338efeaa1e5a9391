#include "codemorph/edits.hpp"

#include <gtest/gtest.h>

#include <random>

#include "codemorph/errors.hpp"

namespace codemorph {
namespace {

TEST(ApplyEdits, EmptyScriptIsIdentity) {
  EXPECT_EQ(apply_edits("abc", {}), "abc");
  EXPECT_EQ(apply_edits("", {}), "");
}

TEST(ApplyEdits, CompoundAssignmentRewrite) {
  // "x = x + y;" with the "= x +" span replaced by "+="
  std::string source = "x = x + y;";
  std::vector<TextEdit> edits{{Span{2, 7}, "+="}};
  EXPECT_EQ(apply_edits(source, edits), "x += y;");
}

TEST(ApplyEdits, AdjacentSpans) {
  std::vector<TextEdit> edits{{Span{0, 1}, "z"}, {Span{1, 2}, "w"}};
  EXPECT_EQ(apply_edits("ab", edits), "zw");
}

TEST(ApplyEdits, OverlapThrows) {
  std::vector<TextEdit> edits{{Span{0, 2}, "z"}, {Span{1, 3}, "w"}};
  EXPECT_THROW(apply_edits("abcd", edits), OverlapError);
}

TEST(ApplyEdits, OutOfBoundsThrows) {
  std::vector<TextEdit> edits{{Span{0, 10}, "z"}};
  EXPECT_THROW(apply_edits("ab", edits), OverlapError);
}

TEST(ApplyEdits, InsertionBeforeReplacementAtSameOffset) {
  std::vector<TextEdit> edits{{Span{1, 1}, "X"}, {Span{1, 2}, "Y"}};
  EXPECT_EQ(apply_edits("ab", edits), "aXY");
}

TEST(ApplyEdits, UnsortedInputIsSorted) {
  std::vector<TextEdit> edits{{Span{2, 3}, "C"}, {Span{0, 1}, "A"}};
  EXPECT_EQ(apply_edits("abc", edits), "AbC");
}

// Output length = input length + sum(len(replacement) - len(span)).
TEST(ApplyEdits, LengthProperty) {
  std::mt19937_64 rng(20240817);
  for (int round = 0; round < 200; ++round) {
    std::string source(std::uniform_int_distribution<std::size_t>(0, 64)(rng), 'a');
    for (char& c : source) {
      c = static_cast<char>('a' + rng() % 26);
    }
    std::vector<TextEdit> edits;
    std::size_t cursor = 0;
    long delta = 0;
    while (cursor < source.size()) {
      std::size_t start = cursor + rng() % 5;
      if (start >= source.size()) break;
      std::size_t end = std::min(source.size(), start + rng() % 4);
      std::string repl(rng() % 5, 'Z');
      delta += static_cast<long>(repl.size()) - static_cast<long>(end - start);
      edits.push_back(TextEdit{Span{start, end}, repl});
      cursor = end + 1;
    }
    std::string out = apply_edits(source, edits);
    EXPECT_EQ(static_cast<long>(out.size()),
              static_cast<long>(source.size()) + delta);
  }
}

TEST(TextDiffers, Basic) {
  EXPECT_FALSE(text_differs("a", "a"));
  EXPECT_TRUE(text_differs("int x=1;", "int y=1;"));
}

TEST(TextDiffers, NewlineNormalization) {
  EXPECT_FALSE(text_differs("a\r\nb", "a\nb"));
  EXPECT_FALSE(text_differs("a\rb", "a\nb"));
  EXPECT_TRUE(text_differs("a\nb", "a b"));
}

TEST(NormalizeNewlines, CrLfAndBareCr) {
  EXPECT_EQ(normalize_newlines("a\r\nb\rc\n"), "a\nb\nc\n");
}

}  // namespace
}  // namespace codemorph
