#include "codemorph/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace codemorph {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
  static const std::unordered_set<std::string_view> kw = {
      "abstract", "assert",   "boolean",  "break",      "byte",    "case",
      "catch",    "char",     "class",    "const",      "continue", "default",
      "do",       "double",   "else",     "enum",       "extends", "final",
      "finally",  "float",    "for",      "goto",       "if",      "implements",
      "import",   "instanceof", "int",    "interface",  "long",    "native",
      "new",      "package",  "private",  "protected",  "public",  "return",
      "short",    "static",   "strictfp", "super",      "switch",  "synchronized",
      "this",     "throw",    "throws",   "transient",  "try",     "void",
      "volatile", "while",    "true",     "false",      "null",
  };
  return kw;
}

bool ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

bool digit_or_underscore(unsigned char c) { return std::isdigit(c) || c == '_'; }

// Multi-char operators, longest first. '>' compounds (>>, >=, >>=, ...)
// are deliberately absent: '>' always lexes as a single token so nested
// generic type arguments (List<List<String>>) close cleanly; the parser
// re-fuses adjacent '>' tokens in expression context.
constexpr std::array<std::string_view, 19> kLongOps = {
    "<<=", "->", "::", "++", "--", "<<", "<=", "==", "!=",
    "&&",  "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  return keyword_set().count(word) > 0;
}

std::vector<Token> lex_java(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();

  auto push = [&](TokenKind kind, std::size_t start, std::size_t end) {
    out.push_back(Token{kind, Span{start, end}});
  };

  while (i < n) {
    const std::size_t start = i;
    unsigned char c = static_cast<unsigned char>(src[i]);

    if (std::isspace(c)) {
      while (i < n && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
      push(TokenKind::kWhitespace, start, i);
      continue;
    }

    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      i += 2;
      while (i < n && src[i] != '\n') ++i;
      push(TokenKind::kLineComment, start, i);
      continue;
    }

    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(src[i] == '*' && src[i + 1] == '/')) ++i;
      i = (i + 1 < n) ? i + 2 : n;
      push(TokenKind::kBlockComment, start, i);
      continue;
    }

    if (ident_start(c)) {
      while (i < n && ident_part(static_cast<unsigned char>(src[i]))) ++i;
      std::string_view word = src.substr(start, i - start);
      push(is_java_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
           start, i);
      continue;
    }

    if (std::isdigit(c) || (c == '.' && i + 1 < n &&
                            std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      bool is_float = false;
      if (c == '0' && i + 1 < n && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        i += 2;
        while (i < n && (std::isxdigit(static_cast<unsigned char>(src[i])) ||
                         src[i] == '_'))
          ++i;
        // Hex floats exist but are vanishingly rare; treat a trailing p-part
        // as part of the literal if present.
        if (i < n && (src[i] == '.' || src[i] == 'p' || src[i] == 'P')) {
          is_float = true;
          while (i < n && (std::isxdigit(static_cast<unsigned char>(src[i])) ||
                           src[i] == '.' || src[i] == 'p' || src[i] == 'P' ||
                           src[i] == '+' || src[i] == '-'))
            ++i;
        }
      } else if (c == '0' && i + 1 < n && (src[i + 1] == 'b' || src[i + 1] == 'B')) {
        i += 2;
        while (i < n && (src[i] == '0' || src[i] == '1' || src[i] == '_')) ++i;
      } else {
        while (i < n && digit_or_underscore(static_cast<unsigned char>(src[i]))) ++i;
        if (i < n && src[i] == '.') {
          is_float = true;
          ++i;
          while (i < n && digit_or_underscore(static_cast<unsigned char>(src[i]))) ++i;
        }
        if (i < n && (src[i] == 'e' || src[i] == 'E')) {
          is_float = true;
          ++i;
          if (i < n && (src[i] == '+' || src[i] == '-')) ++i;
          while (i < n && digit_or_underscore(static_cast<unsigned char>(src[i]))) ++i;
        }
      }
      if (i < n && (src[i] == 'f' || src[i] == 'F' || src[i] == 'd' || src[i] == 'D')) {
        is_float = true;
        ++i;
      } else if (i < n && (src[i] == 'l' || src[i] == 'L')) {
        ++i;
      }
      push(is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral, start, i);
      continue;
    }

    if (c == '"') {
      if (i + 2 < n && src[i + 1] == '"' && src[i + 2] == '"') {
        // text block
        i += 3;
        while (i + 2 < n && !(src[i] == '"' && src[i + 1] == '"' && src[i + 2] == '"')) {
          if (src[i] == '\\') ++i;
          ++i;
        }
        i = (i + 2 < n) ? i + 3 : n;
        push(TokenKind::kTextBlock, start, i);
      } else {
        ++i;
        while (i < n && src[i] != '"' && src[i] != '\n') {
          if (src[i] == '\\' && i + 1 < n) ++i;
          ++i;
        }
        if (i < n && src[i] == '"') ++i;
        push(TokenKind::kStringLiteral, start, i);
      }
      continue;
    }

    if (c == '\'') {
      ++i;
      while (i < n && src[i] != '\'' && src[i] != '\n') {
        if (src[i] == '\\' && i + 1 < n) ++i;
        ++i;
      }
      if (i < n && src[i] == '\'') ++i;
      push(TokenKind::kCharLiteral, start, i);
      continue;
    }

    bool matched = false;
    for (std::string_view op : kLongOps) {
      if (src.substr(i, op.size()) == op) {
        i += op.size();
        push(TokenKind::kOperator, start, i);
        matched = true;
        break;
      }
    }
    if (matched) continue;

    static constexpr std::string_view kSingles = "+-*/%=<>!~&|^?:.,;()[]{}@";
    if (kSingles.find(static_cast<char>(c)) != std::string_view::npos) {
      ++i;
      push(TokenKind::kOperator, start, i);
      continue;
    }

    ++i;
    push(TokenKind::kError, start, i);
  }
  return out;
}

std::vector<std::string> token_texts(std::string_view source) {
  std::vector<std::string> out;
  for (const Token& t : lex_java(source)) {
    if (!is_trivia(t.kind)) out.emplace_back(slice(source, t.span));
  }
  return out;
}

bool tokens_identical(std::string_view a, std::string_view b) {
  return token_texts(a) == token_texts(b);
}

}  // namespace codemorph
