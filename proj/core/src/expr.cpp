// Copyright 2026 The acalg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acalg/expr.hpp"

#include <cctype>

namespace acalg {

namespace {

struct Token {
  enum class Kind { Number, Ident, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= text_.size()) return t;
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isdigit(c)) {
      t.kind = Token::Kind::Number;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        t.text += advance_byte();
      }
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        t.text += advance_byte();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          t.text += advance_byte();
        }
      }
      return t;
    }
    if (std::isalpha(c) || c == '_') {
      t.kind = Token::Kind::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        t.text += advance_byte();
      }
      return t;
    }
    // mu (CE BC) and partial (E2 88 82), optionally with a combining macron
    // (CC 84) or overline (CC 85).
    if (starts_with("\xCE\xBC") || starts_with("\xE2\x88\x82")) {
      t.kind = Token::Kind::Ident;
      const std::size_t n = starts_with("\xCE\xBC") ? 2 : 3;
      t.text = std::string(text_.substr(pos_, n));
      pos_ += n;
      ++column_;
      if (starts_with("\xCC\x84") || starts_with("\xCC\x85")) {
        t.text += std::string(text_.substr(pos_, 2));
        pos_ += 2;
        ++column_;
      }
      return t;
    }
    if (std::string_view("+-*.[](),/").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, advance_byte());
      return t;
    }
    throw SyntaxError("unexpected character '" + current_code_point() + "'", line_, column_);
  }

 private:
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  char advance_byte() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
    return c;
  }

  std::string current_code_point() const {
    std::size_t n = 1;
    while (pos_ + n < text_.size() && (static_cast<unsigned char>(text_[pos_ + n]) & 0xC0) == 0x80) ++n;
    return std::string(text_.substr(pos_, n));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance_byte();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { cur_ = lexer_.next(); }

  ExprPtr parse() {
    ExprPtr e = expr();
    if (cur_.kind != Token::Kind::End) fail("unexpected '" + cur_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, cur_.line, cur_.column);
  }

  bool at_symbol(char c) const { return cur_.kind == Token::Kind::Symbol && cur_.text[0] == c; }

  void expect(char c) {
    if (!at_symbol(c)) {
      fail(std::string("expected '") + c + "'" +
           (cur_.kind == Token::Kind::End ? " before end of input" : ", got '" + cur_.text + "'"));
    }
    cur_ = lexer_.next();
  }

  static ExprPtr node(Expr::Kind kind, const Token& at, std::vector<ExprPtr> children) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    e->children = std::move(children);
    return e;
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (at_symbol('+') || at_symbol('-')) {
      const Token op = cur_;
      cur_ = lexer_.next();
      left = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op, {left, term()});
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = factor();
    while (at_symbol('*') || at_symbol('.')) {
      const Token op = cur_;
      cur_ = lexer_.next();
      left = node(Expr::Kind::Mul, op, {left, factor()});
    }
    return left;
  }

  ExprPtr factor() {
    const Token start = cur_;
    switch (cur_.kind) {
      case Token::Kind::End:
        fail("unexpected end of input");
      case Token::Kind::Number: {
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Number;
        e->number = Scalar::parse(cur_.text);
        e->line = cur_.line;
        e->column = cur_.column;
        cur_ = lexer_.next();
        return e;
      }
      case Token::Kind::Ident: {
        auto e = std::make_shared<Expr>();
        e->line = cur_.line;
        e->column = cur_.column;
        if (cur_.text == "i") {
          e->kind = Expr::Kind::Number;
          e->number = Scalar::i();
        } else if (auto g = generator_from_name(cur_.text)) {
          e->kind = Expr::Kind::Generator;
          e->generator = *g;
        } else {
          fail("unknown symbol '" + cur_.text + "'");
        }
        cur_ = lexer_.next();
        return e;
      }
      case Token::Kind::Symbol:
        break;
    }
    if (at_symbol('-')) {
      cur_ = lexer_.next();
      return node(Expr::Kind::Neg, start, {factor()});
    }
    if (at_symbol('(')) {
      cur_ = lexer_.next();
      ExprPtr inner = expr();
      expect(')');
      return node(Expr::Kind::Group, start, {inner});
    }
    if (at_symbol('[')) {
      cur_ = lexer_.next();
      ExprPtr a = expr();
      expect(',');
      ExprPtr b = expr();
      expect(']');
      return node(Expr::Kind::Bracket, start, {a, b});
    }
    fail("unexpected '" + cur_.text + "'");
  }

  Lexer lexer_;
  Token cur_;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

AlgebraElement elaborate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return AlgebraElement(e.number);
    case Expr::Kind::Generator: return AlgebraElement::generator(e.generator);
    case Expr::Kind::Neg: return -elaborate(*e.children[0]);
    case Expr::Kind::Add: return elaborate(*e.children[0]) + elaborate(*e.children[1]);
    case Expr::Kind::Sub: return elaborate(*e.children[0]) - elaborate(*e.children[1]);
    case Expr::Kind::Mul: return product(elaborate(*e.children[0]), elaborate(*e.children[1]));
    case Expr::Kind::Bracket:
      return graded_commutator(elaborate(*e.children[0]), elaborate(*e.children[1]));
    case Expr::Kind::Group: return elaborate(*e.children[0]);
  }
  return {};
}

AlgebraElement parse_element(std::string_view text) { return elaborate(*parse_expr(text)); }

std::string to_string(const Expr& e) {
  auto child = [&](std::size_t i) { return to_string(*e.children[i]); };
  switch (e.kind) {
    case Expr::Kind::Number: {
      const std::string s = e.number.to_string();
      const bool plain = e.number.is_real() && e.number.re() >= 0;
      return plain ? s : "(" + s + ")";
    }
    case Expr::Kind::Generator: return std::string(name(e.generator));
    case Expr::Kind::Neg: return "-" + child(0);
    case Expr::Kind::Add: return "(" + child(0) + " + " + child(1) + ")";
    case Expr::Kind::Sub: return "(" + child(0) + " - " + child(1) + ")";
    case Expr::Kind::Mul: return "(" + child(0) + " * " + child(1) + ")";
    case Expr::Kind::Bracket: return "[" + child(0) + ", " + child(1) + "]";
    case Expr::Kind::Group: return "(" + child(0) + ")";
  }
  return {};
}

std::string render(const AlgebraElement& a) { return a.to_string(); }

}  // namespace acalg
