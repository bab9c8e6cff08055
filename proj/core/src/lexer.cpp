#include "arc/lexer.hpp"

#include <array>
#include <utility>

namespace arc {

namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 16> kKeywords{{
    {"component", TokenKind::KwComponent},
    {"autoconnect", TokenKind::KwAutoconnect},
    {"port", TokenKind::KwPort},
    {"in", TokenKind::KwIn},
    {"out", TokenKind::KwOut},
    {"enum", TokenKind::KwEnum},
    {"connect", TokenKind::KwConnect},
    {"state", TokenKind::KwState},
    {"handler", TokenKind::KwHandler},
    {"if", TokenKind::KwIf},
    {"else", TokenKind::KwElse},
    {"this", TokenKind::KwThis},
    {"true", TokenKind::KwTrue},
    {"false", TokenKind::KwFalse},
    {"public", TokenKind::KwPublic},
    {"private", TokenKind::KwPrivate},
}};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  Lexer(std::string_view src, std::string_view file) : src_(src), file_(file) {}

  LexResult run() {
    LexResult out;
    for (;;) {
      skip_trivia();
      if (at_end()) break;
      lex_one(out);
    }
    out.tokens.push_back(Token{TokenKind::Eof, {}, here()});
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  bool at_end() const { return i_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  SourcePos here() const { return SourcePos{std::string(file_), line_, col_}; }

  void advance() {
    const char c = src_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      // UTF-8 continuation bytes do not start a new column.
      ++col_;
    }
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void push(LexResult& out, TokenKind kind, SourcePos pos, std::string text = {}) {
    out.tokens.push_back(Token{kind, std::move(text), std::move(pos)});
  }

  void lex_one(LexResult& out) {
    SourcePos pos = here();
    const char c = peek();

    if (is_ident_start(c)) {
      const std::size_t start = i_;
      while (!at_end() && is_ident_char(peek())) advance();
      std::string_view word = src_.substr(start, i_ - start);
      for (const auto& [kw, kind] : kKeywords) {
        if (kw == word) {
          push(out, kind, std::move(pos));
          return;
        }
      }
      push(out, TokenKind::Identifier, std::move(pos), std::string(word));
      return;
    }

    if (is_digit(c)) {
      const std::size_t start = i_;
      while (!at_end() && is_digit(peek())) advance();
      if (!at_end() && is_ident_start(peek())) {
        while (!at_end() && is_ident_char(peek())) advance();
        diags_.push_back(error("E0103", pos, "malformed number '" +
                                                 std::string(src_.substr(start, i_ - start)) + "'"));
        return;
      }
      push(out, TokenKind::IntLiteral, std::move(pos), std::string(src_.substr(start, i_ - start)));
      return;
    }

    if (c == '"') {
      lex_string(out, std::move(pos));
      return;
    }

    auto two = [&](char second, TokenKind kind) {
      if (peek(1) != second) return false;
      advance();
      advance();
      push(out, kind, pos);
      return true;
    };

    switch (c) {
      case '-':
        if (two('>', TokenKind::Arrow)) return;
        break;
      case '=':
        if (two('=', TokenKind::EqEq)) return;
        break;
      case '!':
        if (two('=', TokenKind::NotEq)) return;
        break;
      case '<':
        if (two('=', TokenKind::LessEq)) return;
        break;
      case '>':
        if (two('=', TokenKind::GreaterEq)) return;
        break;
      case '&':
        if (two('&', TokenKind::AndAnd)) return;
        break;
      case '|':
        if (two('|', TokenKind::OrOr)) return;
        break;
      default:
        break;
    }

    TokenKind kind;
    switch (c) {
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '[': kind = TokenKind::LBracket; break;
      case ']': kind = TokenKind::RBracket; break;
      case ';': kind = TokenKind::Semi; break;
      case ',': kind = TokenKind::Comma; break;
      case '.': kind = TokenKind::Dot; break;
      case '=': kind = TokenKind::Assign; break;
      case '<': kind = TokenKind::Less; break;
      case '>': kind = TokenKind::Greater; break;
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '!': kind = TokenKind::Bang; break;
      default: {
        // Skip a whole UTF-8 sequence so one bad code point yields one error.
        advance();
        while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) advance();
        diags_.push_back(error("E0103", std::move(pos), "illegal character"));
        return;
      }
    }
    advance();
    push(out, kind, std::move(pos));
  }

  void lex_string(LexResult& out, SourcePos pos) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') {
        diags_.push_back(error("E0102", std::move(pos), "unterminated string literal"));
        return;
      }
      const char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (at_end() || peek() == '\n') continue;
        const char e = peek();
        switch (e) {
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          default:
            diags_.push_back(error("E0102", here(), std::string("unknown escape '\\") + e + "'"));
            value += e;
            break;
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    push(out, TokenKind::StringLiteral, std::move(pos), std::move(value));
  }

  std::string_view src_;
  std::string_view file_;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
  Diagnostics diags_;
};

}  // namespace

std::string_view spelling(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwComponent: return "'component'";
    case TokenKind::KwAutoconnect: return "'autoconnect'";
    case TokenKind::KwPort: return "'port'";
    case TokenKind::KwIn: return "'in'";
    case TokenKind::KwOut: return "'out'";
    case TokenKind::KwEnum: return "'enum'";
    case TokenKind::KwConnect: return "'connect'";
    case TokenKind::KwState: return "'state'";
    case TokenKind::KwHandler: return "'handler'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwThis: return "'this'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::KwPublic: return "'public'";
    case TokenKind::KwPrivate: return "'private'";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::StringLiteral: return "string literal";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::Semi: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Assign: return "'='";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEq: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEq: return "'>='";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
    case TokenKind::Eof: return "end of file";
  }
  return "?";
}

LexResult tokenize(std::string_view source, std::string_view file) {
  return Lexer(source, file).run();
}

}  // namespace arc
