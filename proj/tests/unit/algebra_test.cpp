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

#include "acalg/algebra.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace acalg {
namespace {

using G = Generator;
using testing::naive_letters;
using testing::naive_normal_form;
using testing::naive_word;
using testing::to_element;

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }
AlgebraElement word(const std::string& letters) { return normal_form(naive_word(letters)); }

int parity(const AlgebraElement& a) { return *a.homogeneous_degree() % 2; }

TEST(Bidegree, Words) {
  EXPECT_EQ(bidegree(G::MuBar), (Bidegree{-1, 2}));
  EXPECT_EQ(bidegree(Word{}), (Bidegree{0, 0}));
  EXPECT_EQ(bidegree(naive_word("Mdm")), (Bidegree{2, 1}));
}

TEST(Rewrite, SingleRules) {
  EXPECT_EQ(word("Mb"), -word("bM"));
  EXPECT_TRUE(word("MM").is_zero());
  EXPECT_TRUE(word("mm").is_zero());
  EXPECT_EQ(word("mM"), -word("Mm") - word("bd") - word("db"));
  EXPECT_EQ(word("Md"), -word("dM") - word("bb"));
  EXPECT_EQ(word("mb"), -word("bm") - word("dd"));
  const auto already = NormalMonomial::from_word(naive_word("bdM"));
  ASSERT_TRUE(already);
  EXPECT_EQ(word("bdM"), AlgebraElement::monomial(*already));
}

TEST(Rewrite, EveryRuleDecreasesTheMeasure) {
  for (G a : kGenerators) {
    for (G b : kGenerators) {
      const RewriteRule* rule = find_rule(a, b);
      if (!rule) continue;
      const Word lhs{a, b};
      for (const auto& [coeff, rhs] : rule->replacement) {
        EXPECT_LT(termination_measure(rhs), termination_measure(lhs)) << rule->relation;
      }
    }
  }
}

TEST(Rewrite, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const Word w = testing::random_word(rng, 1 + trial % 8);
    EXPECT_EQ(normal_form(w), to_element(naive_normal_form(naive_letters(w)))) << word_to_string(w);
  }
}

TEST(Rewrite, StrategyIndependenceUpToLengthSix) {
  for (std::size_t len = 0; len <= 6; ++len) {
    const std::size_t count = std::size_t{1} << (2 * len);
    for (std::size_t code = 0; code < count; ++code) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) w.push_back(kGenerators[(code >> (2 * i)) & 3]);
      const AlgebraElement left = rewrite(w, RewriteStrategy::LeftmostInnermost);
      ASSERT_EQ(left, rewrite(w, RewriteStrategy::RightmostOutermost)) << word_to_string(w);
      ASSERT_EQ(left, normal_form(w)) << word_to_string(w);
    }
  }
}

TEST(Product, Examples) {
  const AlgebraElement x = word("bdM");
  EXPECT_EQ(product(AlgebraElement(1), x), x);
  EXPECT_EQ(product(gen(G::DelBar), gen(G::DelBar)), word("bb"));
  EXPECT_EQ(product(gen(G::Mu), gen(G::MuBar)), -word("Mm") - word("bd") - word("db"));
  const AlgebraElement d = total_differential();
  EXPECT_TRUE(product(d, d).is_zero());
}

TEST(Product, Associativity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = testing::random_homogeneous(rng, trial % 4, 2);
    const auto b = testing::random_homogeneous(rng, (trial / 4) % 4, 2);
    const auto c = testing::random_homogeneous(rng, (trial / 16) % 4, 2);
    ASSERT_EQ(product(product(a, b), c), product(a, product(b, c)));
  }
}

TEST(Commutator, Examples) {
  EXPECT_TRUE(graded_commutator(gen(G::MuBar), gen(G::MuBar)).is_zero());
  EXPECT_EQ(graded_commutator(gen(G::DelBar), gen(G::Del)), word("bd") + word("db"));
  EXPECT_EQ(graded_commutator(gen(G::MuBar), gen(G::Mu)), -word("bd") - word("db"));
}

TEST(Commutator, AntisymmetryAndJacobi) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testing::random_homogeneous(rng, 1 + trial % 2, 3);
    const auto b = testing::random_homogeneous(rng, 1 + (trial / 2) % 2, 3);
    const auto c = testing::random_homogeneous(rng, 1 + (trial / 4) % 2, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const Scalar sign_ab = parity(a) == 1 && parity(b) == 1 ? -1 : 1;
    EXPECT_TRUE((graded_commutator(a, b) + sign_ab * graded_commutator(b, a)).is_zero());
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    const AlgebraElement lhs = graded_commutator(a, graded_commutator(b, c));
    const AlgebraElement rhs = graded_commutator(graded_commutator(a, b), c) +
                               sign_ab * graded_commutator(b, graded_commutator(a, c));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Basis, DimensionsMatchSeries) {
  const auto series = testing::poincare_coefficients(12);
  for (int k = 0; k <= 12; ++k) {
    EXPECT_EQ(dim_A(k), static_cast<std::uint64_t>(series[k])) << k;
    EXPECT_EQ(basis_A(k).size(), dim_A(k)) << k;
    EXPECT_EQ(dim_B(k), std::uint64_t{1} << k);
  }
  EXPECT_EQ(dim_A(5), 72u);
}

TEST(Basis, DegreeTwoListing) {
  std::vector<std::string> names;
  for (const auto& m : basis_A(2)) names.push_back(m.to_string());
  // Tail-major order; the nine monomials are those listed for A_2.
  const std::vector<std::string> expected = {"delbar.delbar", "delbar.del", "del.delbar",
                                             "del.del",       "delbar.mubar", "del.mubar",
                                             "delbar.mu",     "del.mu",       "mubar.mu"};
  EXPECT_EQ(names, expected);
  for (std::size_t i = 0; i < basis_A(4).size(); ++i) EXPECT_EQ(index_in_A(basis_A(4)[i]), i);
  for (std::size_t i = 0; i < basis_B(4).size(); ++i) EXPECT_EQ(index_in_B(basis_B(4)[i]), i);
}

TEST(Subalgebra, RestrictToB) {
  EXPECT_EQ(restrict_to_B(word("bd") + word("db")), word("bd") + word("db"));
  try {
    restrict_to_B(gen(G::MuBar) + gen(G::Del));
    FAIL() << "expected NotInSubalgebra";
  } catch (const NotInSubalgebra& e) {
    EXPECT_EQ(e.offending(), gen(G::MuBar));
  }
  EXPECT_NO_THROW(restrict_to_B(graded_commutator(gen(G::MuBar), word("bdb"))));
}

TEST(Subalgebra, AdjointMuActionPreservesB) {
  for (int len = 0; len <= 6; ++len) {
    for (const auto& m : basis_B(len)) {
      const AlgebraElement b = AlgebraElement::monomial(m);
      EXPECT_TRUE(graded_commutator(gen(G::MuBar), b).in_B()) << m.to_string();
      EXPECT_TRUE(graded_commutator(gen(G::Mu), b).in_B()) << m.to_string();
    }
  }
}

TEST(Element, TextForm) {
  const AlgebraElement a = -word("dM") - word("bb");
  EXPECT_EQ(a.to_string(), "-1*delbar.delbar - 1*del.mubar");
  EXPECT_EQ(AlgebraElement().to_string(), "0");
  EXPECT_EQ(AlgebraElement(Scalar::rational(3, 2)).to_string(), "3/2");
  EXPECT_EQ(a.degrees(), std::set<int>{2});
  EXPECT_FALSE((a + gen(G::Mu)).homogeneous_degree());
}

}  // namespace
}  // namespace acalg
