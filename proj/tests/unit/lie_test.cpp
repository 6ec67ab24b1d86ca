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

#include "acalg/lie.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace acalg {
namespace {

using G = Generator;

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }
LieElement lie(G g) { return LieElement::generator(g); }
AlgebraElement comm(const AlgebraElement& a, const AlgebraElement& b) { return graded_commutator(a, b); }

TEST(LieBasis, LowDegrees) {
  EXPECT_EQ(dim_g(1), 4u);
  const auto g2 = lie_basis(2);
  ASSERT_EQ(g2.size(), 3u);
  Echelon mine;
  for (const auto& e : g2) mine.insert(coordinates_in_A(e.value(), 2));
  for (const auto& v : {comm(gen(G::Del), gen(G::Del)), comm(gen(G::DelBar), gen(G::DelBar)),
                        comm(gen(G::Del), gen(G::DelBar))}) {
    EXPECT_TRUE(mine.contains(coordinates_in_A(v, 2)));
    EXPECT_TRUE(lie_basis_data(2).contains(v));
  }
  EXPECT_EQ(dim_g(3), 2u);
}

TEST(LieBasis, FreenessCertificate) {
  const auto d = testing::super_pbw_dims(8);
  EXPECT_EQ(dim_h(1), static_cast<std::size_t>(d[1]));
  for (int k = 2; k <= 8; ++k) {
    EXPECT_EQ(dim_h(k), static_cast<std::size_t>(d[k])) << k;
    EXPECT_EQ(dim_g(k), dim_h(k)) << k;
  }
  const std::vector<std::size_t> expected = {0, 4, 3, 2, 3, 6, 11, 18, 30};
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(dim_g(k), expected[k]) << k;
}

TEST(LieBasis, ExpressionsEvaluateToElements) {
  for (int k = 1; k <= 5; ++k) {
    const LieBasis& b = lie_basis_data(k);
    ASSERT_EQ(b.expressions().size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(b.expressions()[i].evaluate(), b.elements()[i].value());
      EXPECT_EQ(b.expressions()[i].degree(), k);
    }
  }
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(lie(G::MuBar), lie(G::Del)).value(),
            Scalar::rational(-1, 2) * comm(gen(G::DelBar), gen(G::DelBar)));
  EXPECT_EQ(bracket(lie(G::Del), lie(G::Del)).value(), 2 * product(gen(G::Del), gen(G::Del)));
  const LieElement dd = bracket(lie(G::Del), lie(G::DelBar));
  EXPECT_TRUE(bracket(lie(G::MuBar), dd).is_zero());
  EXPECT_EQ(bracket(lie(G::MuBar), dd).degree(), 3);
}

TEST(Certify, RejectsElementsOutsideG) {
  EXPECT_THROW(LieElement::certify(product(gen(G::DelBar), gen(G::Del))), NotInLieAlgebra);
  EXPECT_THROW(LieElement::certify(gen(G::Del) + comm(gen(G::Del), gen(G::Del))), Error);
  EXPECT_THROW(LieElement::certify(AlgebraElement()), NotInLieAlgebra);
  EXPECT_TRUE(LieElement::certify(AlgebraElement(), 3).is_zero());
}

TEST(Ideal, HIsStableUnderGenerators) {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& h : h_basis(k)) {
      ASSERT_TRUE(h.in_h());
      for (G g : kGenerators) {
        const LieElement b = bracket(lie(g), h);
        EXPECT_NO_THROW(restrict_to_B(b.value())) << name(g) << " on " << h.to_string();
      }
    }
  }
}

TEST(Heisenberg, MuSpanCloses) {
  const LieElement z = bracket(lie(G::MuBar), lie(G::Mu));
  EXPECT_FALSE(z.is_zero());
  EXPECT_TRUE(bracket(lie(G::MuBar), z).is_zero());
  EXPECT_TRUE(bracket(lie(G::Mu), z).is_zero());
}

TEST(Derivation, Examples) {
  const BracketExpr db = BracketExpr::leaf(G::DelBar);
  const BracketExpr d = BracketExpr::leaf(G::Del);
  EXPECT_TRUE(derivation_value(Derivation::MuBar, db).is_zero());
  EXPECT_EQ(derivation_value(Derivation::MuBar, d).value(),
            Scalar::rational(-1, 2) * comm(gen(G::DelBar), gen(G::DelBar)));
  EXPECT_TRUE(derivation_value(Derivation::MuBar, BracketExpr::bracket(d, db)).is_zero());
  EXPECT_THROW(derivation_apply(Derivation::MuBar, BracketExpr::leaf(G::Mu)), OutOfDomain);
}

// Left-normed brackets in delbar and del of length k; they span h_k.
std::vector<BracketExpr> h_brackets(int k) {
  std::vector<BracketExpr> out = {BracketExpr::leaf(G::DelBar), BracketExpr::leaf(G::Del)};
  for (int len = 2; len <= k; ++len) {
    std::vector<BracketExpr> next;
    for (const auto& e : out) {
      next.push_back(BracketExpr::bracket(BracketExpr::leaf(G::DelBar), e));
      next.push_back(BracketExpr::bracket(BracketExpr::leaf(G::Del), e));
    }
    out = std::move(next);
  }
  return out;
}

TEST(Derivation, SemidirectModelMatchesCommutator) {
  for (int k = 1; k <= 5; ++k) {
    for (const auto& e : h_brackets(k)) {
      EXPECT_EQ(derivation_value(Derivation::MuBar, e).value(), comm(gen(G::MuBar), e.evaluate()))
          << e.to_string();
      EXPECT_EQ(derivation_value(Derivation::Mu, e).value(), comm(gen(G::Mu), e.evaluate()))
          << e.to_string();
    }
  }
}

TEST(Derivation, MuBarSquaresToZero) {
  std::vector<BracketExpr> samples = {BracketExpr::leaf(G::DelBar), BracketExpr::leaf(G::Del)};
  for (const auto& e : h_brackets(2)) samples.push_back(e);
  for (const auto& h : samples) {
    const LieCombination twice = derivation_apply(Derivation::MuBar, derivation_apply(Derivation::MuBar, {{1, h}}));
    EXPECT_TRUE(evaluate(twice).is_zero()) << h.to_string();
  }
}

TEST(ProjectHol, Quotient) {
  const LieElement d = LieElement::certify(total_differential());
  EXPECT_EQ(project_hol(d), (HolElement{1, 1}));
  EXPECT_TRUE(project_hol(lie(G::MuBar)).is_zero());
  EXPECT_TRUE(project_hol(bracket(lie(G::Del), lie(G::DelBar))).is_zero());
  EXPECT_EQ(project_hol(d).to_string(), "1*delbar + 1*del");
}

}  // namespace
}  // namespace acalg
