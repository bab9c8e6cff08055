#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arc/diagnostic.hpp"

namespace arc {

enum class TokenKind {
  // keywords
  KwComponent,
  KwAutoconnect,
  KwPort,
  KwIn,
  KwOut,
  KwEnum,
  KwConnect,
  KwState,
  KwHandler,
  KwIf,
  KwElse,
  KwThis,
  KwTrue,
  KwFalse,
  KwPublic,
  KwPrivate,
  // literals and names
  Identifier,
  IntLiteral,
  StringLiteral,
  // punctuation
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Dot,
  Arrow,
  Assign,
  EqEq,
  NotEq,
  Less,
  LessEq,
  Greater,
  GreaterEq,
  Plus,
  Minus,
  Star,
  Slash,
  Bang,
  AndAnd,
  OrOr,
  Eof,
};

struct Token {
  TokenKind kind = TokenKind::Eof;
  // Identifier text, decoded string literal contents, or the raw digits of
  // an integer literal.
  std::string text;
  SourcePos pos;

  bool is(TokenKind k) const { return kind == k; }
};

std::string_view spelling(TokenKind kind);

struct LexResult {
  std::vector<Token> tokens;  // always terminated by an Eof token
  Diagnostics diagnostics;
};

// Comments run from `//` to end of line. Lexing never stops early: illegal
// characters are reported and skipped, an unterminated string ends at the
// end of its line.
LexResult tokenize(std::string_view source, std::string_view file);

}  // namespace arc
