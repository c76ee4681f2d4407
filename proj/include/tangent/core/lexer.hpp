// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tangent/core/error.hpp"

namespace tangent {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::int64_t value = 0;
  std::size_t pos = 0;

  bool is(std::string_view sym) const { return kind == Kind::Symbol && text == sym; }
  bool is_ident(std::string_view name) const { return kind == Kind::Ident && text == name; }
};

// Shared tokenizer for constraint expressions and pair expressions. A few
// Unicode spellings are folded to their ASCII forms.
inline std::vector<Token> tokenize(std::string_view src) {
  static const std::pair<std::string_view, std::string_view> kUnicode[] = {
      {"\xC3\x97", "\xC3\x97"},      // multiplication sign kept as product
      {"\xE2\x88\xA9", "\xE2\x88\xA9"},  // intersection
      {"\xE2\x88\x92", "-"},
      {"\xE2\x89\xA4", "<="},
      {"\xE2\x89\xA5", ">="},
      {"\xE2\x89\xA0", "!="},
  };
  static const std::string_view kTwoChar[] = {"==", "!=", "<=", ">=", "&&", "||"};

  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string text, std::size_t pos, std::int64_t v = 0) {
    Token t;
    t.kind = k;
    t.text = std::move(text);
    t.pos = pos;
    t.value = v;
    out.push_back(std::move(t));
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        if (v > 100000000000LL) throw SyntaxError("integer literal too large", i);
        v = v * 10 + (src[j] - '0');
        ++j;
      }
      push(Token::Kind::Number, std::string(src.substr(i, j - i)), i, v);
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      std::string word(src.substr(i, j - i));
      // "xSO(3)" reads as a product sign followed by SO(3).
      if (word.size() > 1 && (word[0] == 'x' || word[0] == 'X') && std::isupper(static_cast<unsigned char>(word[1]))) {
        push(Token::Kind::Symbol, "\xC3\x97", i);
        push(Token::Kind::Ident, word.substr(1), i + 1);
      } else {
        push(Token::Kind::Ident, word, i);
      }
      i = j;
      continue;
    }
    if (c >= 0x80) {
      bool matched = false;
      for (const auto& [from, to] : kUnicode) {
        if (src.substr(i, from.size()) == from) {
          push(Token::Kind::Symbol, std::string(to), i);
          i += from.size();
          matched = true;
          break;
        }
      }
      if (!matched) throw SyntaxError("unexpected character", i);
      continue;
    }
    bool two = false;
    for (std::string_view op : kTwoChar) {
      if (src.substr(i, 2) == op) {
        push(Token::Kind::Symbol, std::string(op), i);
        i += 2;
        two = true;
        break;
      }
    }
    if (two) continue;
    if (std::string_view("()[],/*+-%<>!^=?:").find(static_cast<char>(c)) != std::string_view::npos) {
      push(Token::Kind::Symbol, std::string(1, static_cast<char>(c)), i);
      ++i;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
  }
  push(Token::Kind::End, "", src.size());
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(std::string_view sym) {
    if (peek().is(sym)) {
      next();
      return true;
    }
    return false;
  }
  void expect(std::string_view sym) {
    if (!accept(sym)) throw SyntaxError("expected '" + std::string(sym) + "'", peek().pos);
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace tangent
