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

#include "acalg/scalar.hpp"

#include <gtest/gtest.h>

#include "acalg/errors.hpp"

namespace acalg {
namespace {

TEST(Scalar, ArithmeticIsExact) {
  const Scalar a = Scalar::rational(1, 3);
  const Scalar b = Scalar::rational(1, 6);
  EXPECT_EQ(a + b, Scalar::rational(1, 2));
  EXPECT_EQ(a * b, Scalar::rational(1, 18));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(Scalar, InverseAndPow) {
  const Scalar z(mpq_class(3), mpq_class(4));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z.pow(3) * z.pow(-3), Scalar(1));
  EXPECT_EQ(z.pow(0), Scalar(1));
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(0).pow(-1), DivisionByZero);
}

TEST(Scalar, Conjugation) {
  const Scalar z(mpq_class(1, 2), mpq_class(-5, 3));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_TRUE((z * z.conj()).is_real());
  EXPECT_EQ((z + z.conj()).im(), 0);
}

TEST(Scalar, TextRoundTrip) {
  for (const char* text : {"0", "-1/2", "3+1/2*i", "-i", "i", "7/3-2*i", "5*i"}) {
    const Scalar s = Scalar::parse(text);
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << text;
  }
  EXPECT_EQ(Scalar::parse(" 2 / 4 ").to_string(), "1/2");
  EXPECT_EQ(Scalar(mpq_class(3), mpq_class(1, 2)).to_string(), "3+1/2*i");
  EXPECT_THROW(Scalar::parse("1/0"), Error);
  EXPECT_THROW(Scalar::parse("abc"), SyntaxError);
}

}  // namespace
}  // namespace acalg
