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

#include "acalg/homology.hpp"

#include <gtest/gtest.h>

#include <random>

#include "acalg/mc.hpp"
#include "oracles.hpp"

namespace acalg {
namespace {

using G = Generator;

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }
LieElement lie(G g) { return LieElement::generator(g); }
LieElement d() { return LieElement::certify(total_differential()); }
AlgebraElement dd() {
  return graded_commutator(gen(G::Del), gen(G::DelBar));
}

std::vector<std::size_t> dims(const std::vector<CohomologyGroup>& table) {
  std::vector<std::size_t> out;
  for (const auto& h : table) out.push_back(h.dim());
  return out;
}

bool same_span(const std::vector<AlgebraElement>& a, const std::vector<AlgebraElement>& b, int k) {
  Echelon ea;
  Echelon both;
  for (const auto& x : a) {
    ea.insert(coordinates_in_A(x, k));
    both.insert(coordinates_in_A(x, k));
  }
  Echelon eb;
  for (const auto& x : b) {
    eb.insert(coordinates_in_A(x, k));
    both.insert(coordinates_in_A(x, k));
  }
  return ea.rank() == eb.rank() && both.rank() == ea.rank();
}

TEST(Carrier, ParseAndDims) {
  EXPECT_EQ(Carrier::parse("g").kind(), CarrierKind::G);
  EXPECT_EQ(Carrier::parse("0").kind(), CarrierKind::Zero);
  EXPECT_THROW(Carrier::parse("q"), OutOfDomain);
  EXPECT_EQ(Carrier::g().dim(0), 0u);
  EXPECT_EQ(Carrier::B().dim(0), 1u);
  EXPECT_EQ(Carrier::A().dim(3), 18u);
  EXPECT_EQ(Carrier::h().dim(2), 3u);
  EXPECT_THROW(Carrier::B().coordinates(gen(G::MuBar), 1), NotInSubalgebra);
  EXPECT_THROW(Carrier::g().coordinates(product(gen(G::Del), gen(G::Del)) + gen(G::Del), 2),
               NonHomogeneousOperand);
}

TEST(AdMatrix, SquaresToZero) {
  std::vector<LieElement> diffs = {d(), lie(G::MuBar), lie(G::Mu)};
  std::mt19937_64 rng(21);
  for (int i = 0; i < 3; ++i) {
    diffs.push_back(d_st(testing::random_scalar(rng), testing::random_scalar(rng)));
  }
  for (const auto& a : diffs) {
    for (int k = 1; k <= 5; ++k) {
      const ExactMatrix first = ad_matrix(a, k, Carrier::g()).matrix;
      const ExactMatrix second = ad_matrix(a, k + 1, Carrier::g()).matrix;
      EXPECT_TRUE((second * first).is_zero()) << a.to_string() << " at " << k;
    }
  }
  for (int k = 0; k <= 6; ++k) {
    const ExactMatrix first = ad_matrix(lie(G::MuBar), k, Carrier::B()).matrix;
    const ExactMatrix second = ad_matrix(lie(G::MuBar), k + 1, Carrier::B()).matrix;
    EXPECT_TRUE((second * first).is_zero()) << k;
  }
}

TEST(Cohomology, HOfMuBarOnH) {
  const auto table = cohomology_table(lie(G::MuBar), 6, Carrier::h());
  EXPECT_EQ(dims(table), (std::vector<std::size_t>{1, 1, 0, 0, 0, 0}));
  EXPECT_EQ(table[0].class_rank({gen(G::DelBar)}), 1u);
  EXPECT_EQ(table[1].class_rank({dd()}), 1u);
}

TEST(Cohomology, BOfMuBarIsOnePerDegree) {
  const auto table = cohomology_table(lie(G::MuBar), 8, Carrier::B());
  EXPECT_EQ(dims(table), std::vector<std::size_t>(9, 1));
  EXPECT_EQ(table[0].representatives()[0], AlgebraElement(1));
}

TEST(Cohomology, QuasiIsomorphismWithHolomorphicPart) {
  const auto table = cohomology_table(d(), 6, Carrier::g());
  EXPECT_EQ(dims(table), (std::vector<std::size_t>{2, 0, 0, 0, 0, 0}));
  const CohomologyGroup& h1 = table[0];
  const AlgebraElement second = 3 * gen(G::MuBar) + gen(G::DelBar) - gen(G::Del) - 3 * gen(G::Mu);
  EXPECT_TRUE(same_span(h1.kernel_basis(), {total_differential(), second}, 1));
  // Nothing to quotient in degree 1, so representatives span the kernel.
  EXPECT_TRUE(same_span(h1.representatives(), {total_differential(), second}, 1));

  std::vector<SparseVector> images;
  for (const auto& r : h1.representatives()) {
    const HolElement h = project_hol(LieElement::certify(r, 1));
    SparseVector v;
    v.push_back(0, h.delbar);
    v.push_back(1, h.del);
    images.push_back(v);
  }
  EXPECT_EQ(rank(images), 2u);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(table[k - 1].dim(), hol_cohomology_dim(k));
}

TEST(Cohomology, RejectsNonDifferential) {
  const LieElement a = LieElement::certify(gen(G::MuBar) + gen(G::Mu));
  EXPECT_THROW(cohomology(a, 1, Carrier::g()), NotADifferential);
}

TEST(Cohomology, ClassOfChecksCycles) {
  const CohomologyGroup h1 = cohomology(lie(G::MuBar), 1, Carrier::B());
  EXPECT_THROW(h1.class_of(gen(G::Del)), OutOfDomain);
  EXPECT_TRUE(h1.is_boundary(AlgebraElement()));
}

TEST(SplitB, Examples) {
  const AlgebraElement bd = product(gen(G::DelBar), gen(G::Del));
  EXPECT_EQ(split_B(2, bd), (std::pair<AlgebraElement, AlgebraElement>{AlgebraElement(), gen(G::Del)}));
  const AlgebraElement mix = product(gen(G::Del), gen(G::DelBar)) + product(gen(G::DelBar), gen(G::DelBar));
  EXPECT_EQ(split_B(2, mix), (std::pair<AlgebraElement, AlgebraElement>{gen(G::DelBar), gen(G::DelBar)}));
  EXPECT_THROW(split_B(0, AlgebraElement(1)), InvalidDegree);
  EXPECT_THROW(split_B(1, gen(G::MuBar)), NotInSubalgebra);
}

TEST(LongExactSequence, PassesToDegreeSix) {
  const LesReport r = les_check(6);
  EXPECT_TRUE(r.passed) << (r.failure ? r.failure->identity : "");
  EXPECT_GT(r.matrix_identity_checks, 0u);
  EXPECT_GT(r.skew_commutation_checks, 0u);
  EXPECT_GT(r.exactness_nodes, 0u);
  EXPECT_EQ(r.cohomology_dims, std::vector<std::size_t>(7, 1));
  EXPECT_THROW(les_check(1), InvalidDegree);
}

TEST(Frolicher, FirstPage) {
  const auto e1 = frolicher_E1(Carrier::g(), 6);
  ASSERT_EQ(e1.size(), 6u);
  for (std::size_t i = 2; i < e1.size(); ++i) EXPECT_EQ(e1[i], 0u) << i + 1;
  const auto abutment = cohomology_table(d(), 6, Carrier::g());
  for (std::size_t i = 0; i < e1.size(); ++i) EXPECT_GE(e1[i], abutment[i].dim());
  for (auto v : frolicher_E1(Carrier::zero(), 4)) EXPECT_EQ(v, 0u);
}

TEST(Ring, ExteriorTimesPolynomial) {
  // H(B, ad_mubar) = Lambda(delbar) x k[[del,delbar]]: odd times odd vanishes.
  for (const auto& p : B_cohomology_products(8)) {
    const bool both_odd = p.left_degree % 2 == 1 && p.right_degree % 2 == 1;
    EXPECT_EQ(p.coefficient.is_zero(), both_odd) << p.left_degree << " x " << p.right_degree;
  }
}

}  // namespace
}  // namespace acalg
