#pragma once

// Internal tokenizer shared by the scalar and form expression parsers.
// Not installed.

#include <cctype>
#include <string>
#include <string_view>

#include "plectic/error.hpp"

namespace plectic::lexdetail {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t start = i_;
    if (i_ >= src_.size()) return {Token::End, "", start};
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      Token t{Token::Int, std::string(src_.substr(i_, j - i_)), start};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      Token t{Token::Ident, std::string(src_.substr(i_, j - i_)), start};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Plus, "+", start};
      case '-': return {Token::Minus, "-", start};
      case '*': return {Token::Star, "*", start};
      case '/': return {Token::Slash, "/", start};
      case '^': return {Token::Caret, "^", start};
      case '(': return {Token::LParen, "(", start};
      case ')': return {Token::RParen, ")", start};
      default:
        fail(ErrorKind::Parse,
             "unexpected character '" + std::string(1, c) + "' at position " +
                 std::to_string(start));
    }
  }

private:
  std::string_view src_;
  size_t i_ = 0;
};

} // namespace plectic::lexdetail
