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

// Operator expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '.') factor)*
//   factor := '-' factor | number | 'i' | gen | '[' expr ',' expr ']' | '(' expr ')'
//   number := digits ['/' digits]
//   gen    := mubar | delbar | del | mu   (or the Unicode symbols)

#ifndef ACALG_EXPR_HPP
#define ACALG_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "acalg/algebra.hpp"

namespace acalg {

struct Expr {
  enum class Kind { Number, Generator, Neg, Add, Sub, Mul, Bracket, Group };

  Kind kind = Kind::Number;
  Scalar number;  // Number (the unit 'i' is the number i)
  Generator generator = Generator::MuBar;
  std::vector<std::shared_ptr<const Expr>> children;
  int line = 1;
  int column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws SyntaxError with 1-based line and column (in code points).
ExprPtr parse_expr(std::string_view text);

/// Evaluates to normal form. Brackets need homogeneous operands.
AlgebraElement elaborate(const Expr& e);
AlgebraElement parse_element(std::string_view text);

/// Fully parenthesised text of the tree; elaborates like the original.
std::string to_string(const Expr& e);
/// Text of an element that parse_element maps back to it.
std::string render(const AlgebraElement& a);

}  // namespace acalg

#endif  // ACALG_EXPR_HPP
