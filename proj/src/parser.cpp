// Copyright 2026 The dlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlgames/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

enum class Tok {
  kIdent,
  kKeywordExists,
  kKeywordSelf,
  kBang,
  kAmp,
  kBar,
  kBackslash,
  kMinus,
  kDot,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::kEnd, "", start};
    char ch = src_[pos_];
    auto single = [&](Tok t) {
      ++pos_;
      return Token{t, std::string(1, ch), start};
    };
    switch (ch) {
      case '!':
        return single(Tok::kBang);
      case '&':
        return single(Tok::kAmp);
      case '|':
        return single(Tok::kBar);
      case '\\':
        return single(Tok::kBackslash);
      case '-':
        return single(Tok::kMinus);
      case '.':
        return single(Tok::kDot);
      case '(':
        return single(Tok::kLParen);
      case ')':
        return single(Tok::kRParen);
      case '{':
        return single(Tok::kLBrace);
      case '}':
        return single(Tok::kRBrace);
      case '`': {
        auto close = src_.find('`', pos_ + 1);
        if (close == std::string_view::npos) {
          throw SyntaxError("unterminated quoted name", start);
        }
        std::string text(src_.substr(pos_ + 1, close - pos_ - 1));
        if (text.empty()) throw SyntaxError("empty quoted name", start);
        pos_ = close + 1;
        return {Tok::kIdent, std::move(text), start};
      }
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
      std::string text(src_.substr(start, pos_ - start));
      if (text == "exists") return {Tok::kKeywordExists, text, start};
      if (text == "Self") return {Tok::kKeywordSelf, text, start};
      return {Tok::kIdent, std::move(text), start};
    }
    throw SyntaxError(std::string("unexpected character '") + ch + "'", start);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Concept concept_expr() {
    Concept out = unary();
    while (cur_.kind == Tok::kAmp) {
      advance();
      out = Concept::conjunction(out, unary());
    }
    return out;
  }

  Role role_expr() {
    Role out = role_atom();
    std::optional<Tok> op;
    while (cur_.kind == Tok::kAmp || cur_.kind == Tok::kBar ||
           cur_.kind == Tok::kBackslash) {
      if (op && *op != cur_.kind) {
        throw SyntaxError(
            "mixed role operators require parentheses", cur_.pos);
      }
      op = cur_.kind;
      advance();
      Role rhs = role_atom();
      switch (*op) {
        case Tok::kAmp:
          out = Role::intersection_of(out, rhs);
          break;
        case Tok::kBar:
          out = Role::union_of(out, rhs);
          break;
        default:
          out = Role::difference_of(out, rhs);
      }
    }
    return out;
  }

  void expect_end() {
    if (cur_.kind != Tok::kEnd) {
      throw SyntaxError("unexpected '" + cur_.text + "'", cur_.pos);
    }
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      throw SyntaxError(std::string("expected ") + what +
                            (cur_.kind == Tok::kEnd
                                 ? std::string(" but input ended")
                                 : " but found '" + cur_.text + "'"),
                        cur_.pos);
    }
    advance();
  }

  Concept unary() {
    switch (cur_.kind) {
      case Tok::kBang:
        advance();
        return Concept::negation(unary());
      case Tok::kKeywordExists: {
        advance();
        Role r = role_expr();
        expect(Tok::kDot, "'.'");
        if (cur_.kind == Tok::kKeywordSelf) {
          advance();
          return Concept::exists_self(r);
        }
        return Concept::exists(r, unary());
      }
      default:
        return primary();
    }
  }

  Concept primary() {
    switch (cur_.kind) {
      case Tok::kIdent: {
        std::string name = cur_.text;
        advance();
        return Concept::name(std::move(name));
      }
      case Tok::kLBrace: {
        advance();
        if (cur_.kind != Tok::kIdent) {
          throw SyntaxError("expected individual name", cur_.pos);
        }
        std::string name = cur_.text;
        advance();
        expect(Tok::kRBrace, "'}'");
        return Concept::nominal(std::move(name));
      }
      case Tok::kLParen: {
        advance();
        Concept c = concept_expr();
        expect(Tok::kRParen, "')'");
        return c;
      }
      case Tok::kEnd:
        throw SyntaxError("expected concept but input ended", cur_.pos);
      default:
        throw SyntaxError("expected concept but found '" + cur_.text + "'",
                          cur_.pos);
    }
  }

  Role role_atom() {
    if (cur_.kind == Tok::kIdent) {
      std::string name = cur_.text;
      advance();
      if (cur_.kind == Tok::kMinus) {
        advance();
        return Role::inverse(std::move(name));
      }
      return Role::atomic(std::move(name));
    }
    if (cur_.kind == Tok::kLParen) {
      advance();
      Role r = role_expr();
      expect(Tok::kRParen, "')'");
      if (cur_.kind == Tok::kMinus) {
        throw SyntaxError("inverse applies to atomic roles only", cur_.pos);
      }
      return r;
    }
    throw SyntaxError(cur_.kind == Tok::kEnd
                          ? std::string("expected role but input ended")
                          : "expected role but found '" + cur_.text + "'",
                      cur_.pos);
  }

  Lexer lexer_;
  Token cur_{Tok::kEnd, "", 0};
};

}  // namespace

Concept parse_concept(std::string_view text) {
  Parser p(text);
  Concept c = p.concept_expr();
  p.expect_end();
  return c;
}

Role parse_role(std::string_view text) {
  Parser p(text);
  Role r = p.role_expr();
  p.expect_end();
  return r;
}

}  // namespace dlgames
