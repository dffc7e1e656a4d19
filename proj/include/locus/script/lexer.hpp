#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locus/script/ast.hpp"

namespace locus::script {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Pos pos, const std::string& msg)
      : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                           std::to_string(pos.col) + ": " + msg),
        pos_(pos),
        message_(msg) {}
  Pos pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Pos pos_;
  std::string message_;
};

struct Token {
  enum class Kind { Ident, Number, String, Op, Newline, End };
  Kind kind;
  std::string text;
  Pos pos;
};

/// Splits a script into tokens. `--` starts a comment. Newlines inside
/// brackets are dropped so expressions may span lines.
inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  int depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    Pos pos{line, col};
    if (c == '\n') {
      if (depth == 0) out.push_back({Token::Kind::Newline, "\n", pos});
      advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '\'')) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw SyntaxError(pos, "unterminated string");
      out.push_back({Token::Kind::String, std::string(src.substr(i + 1, j - i - 1)), pos});
      advance(j - i + 1);
      continue;
    }
    static const char* two[] = {"==", "**", "..", "=>"};
    bool matched = false;
    for (const char* op : two) {
      if (src.substr(i, 2) == op) {
        out.push_back({Token::Kind::Op, op, pos});
        advance(2);
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (std::string_view("+-*/^=()[]{},;#").find(c) != std::string_view::npos) {
      if (c == '(' || c == '[' || c == '{') ++depth;
      if ((c == ')' || c == ']' || c == '}') && depth > 0) --depth;
      out.push_back({Token::Kind::Op, std::string(1, c), pos});
      advance();
      continue;
    }
    throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::End, "", Pos{line, col}});
  return out;
}

}  // namespace locus::script
