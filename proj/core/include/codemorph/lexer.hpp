#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "codemorph/span.hpp"

namespace codemorph {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kIntLiteral,
  kFloatLiteral,
  kCharLiteral,
  kStringLiteral,
  kTextBlock,
  kOperator,
  kLineComment,
  kBlockComment,
  kWhitespace,
  kError,
};

struct Token {
  TokenKind kind;
  Span span;
};

inline bool is_trivia(TokenKind k) {
  return k == TokenKind::kWhitespace || k == TokenKind::kLineComment ||
         k == TokenKind::kBlockComment;
}

// Lexes Java source into a complete token stream (trivia included). Never
// fails: unrecognized bytes become kError tokens. Token spans tile the
// input exactly.
std::vector<Token> lex_java(std::string_view source);

// Significant (non-trivia) token texts, for token-level comparison and
// edit distance.
std::vector<std::string> token_texts(std::string_view source);

// True iff the two sources lex to identical significant token sequences.
bool tokens_identical(std::string_view a, std::string_view b);

bool is_java_keyword(std::string_view word);

}  // namespace codemorph
