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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace acalg {
namespace {

using G = Generator;

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }

TEST(Parse, RelationsElaborateToZero) {
  EXPECT_TRUE(parse_element("[mubar,del] + 1/2*[delbar,delbar]").is_zero());
  EXPECT_TRUE(parse_element("mubar*mubar").is_zero());
  EXPECT_TRUE(parse_element("[mubar,mu]+[delbar,del]").is_zero());
  EXPECT_TRUE(parse_element("(mubar+delbar+del+mu).(mubar+delbar+del+mu)").is_zero());
}

TEST(Parse, ScalarsAndUnicode) {
  EXPECT_EQ(parse_element("3*i*mu - 1/2"), 3 * Scalar::i() * gen(G::Mu) - Scalar::rational(1, 2));
  EXPECT_EQ(parse_element("-(-del)"), gen(G::Del));
  EXPECT_EQ(parse_element("μ̄ + ∂̄ + ∂ + μ"), total_differential());
}

TEST(Parse, SyntaxErrorPositions) {
  try {
    parse_expr("[del");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 5);
  }
  try {
    parse_expr("mu +\n  nabla");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  try {
    parse_expr("μ̄ $");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.column(), 4);
  }
  EXPECT_THROW(parse_expr(""), SyntaxError);
  EXPECT_THROW(parse_expr("del del"), SyntaxError);
  EXPECT_THROW(parse_expr("[del,]"), SyntaxError);
}

TEST(Parse, BracketNeedsHomogeneousOperands) {
  EXPECT_THROW(parse_element("[del + del.del, mu]"), NonHomogeneousOperand);
}

TEST(Parse, TreeTextElaboratesAlike) {
  for (const char* text : {"[mubar,[del,delbar]] - 2*mu.mubar", "-(i*del + 1/3)*(mu - mubar)",
                           "[[del,del],[delbar,mu]]"}) {
    const ExprPtr e = parse_expr(text);
    EXPECT_EQ(parse_element(to_string(*e)), elaborate(*e)) << text;
  }
}

TEST(Render, RoundTripsRandomElements) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    AlgebraElement a;
    for (int k = 0; k <= 4; ++k) {
      if (trial % (k + 2) == 0) continue;
      a += testing::random_homogeneous(rng, k, 3);
    }
    EXPECT_EQ(parse_element(render(a)), a) << render(a);
  }
}

}  // namespace
}  // namespace acalg
