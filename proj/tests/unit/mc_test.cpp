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

#include "acalg/mc.hpp"

#include <gtest/gtest.h>

#include <random>

#include "acalg/homology.hpp"
#include "oracles.hpp"

namespace acalg {
namespace {

using G = Generator;
using testing::random_nonzero_scalar;
using testing::random_scalar;

AlgebraElement gen(G g) { return AlgebraElement::generator(g); }

G1Coords random_coords(std::mt19937_64& rng) {
  return {random_scalar(rng), random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

std::size_t span_rank(const std::vector<LieElement>& xs) {
  std::vector<SparseVector> v;
  for (const auto& x : xs) v.push_back(coordinates_in_A(x.value(), 1));
  return rank(v);
}

TEST(IsMC, Examples) {
  EXPECT_TRUE(is_mc({1, 1, 1, 1}).is_mc);
  EXPECT_TRUE(is_mc({0, 0, 0, 0}).is_mc);
  const MCCertificate c = is_mc({1, 0, 0, 1});
  EXPECT_FALSE(c.is_mc);
  EXPECT_EQ(c.quadrics[2], Scalar(1));
  EXPECT_THROW(MCPoint({1, 0, 0, 1}), OutOfDomain);
}

TEST(IsMC, BracketMatchesExpansionOracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const G1Coords c = random_coords(rng);
    const MCCertificate cert = is_mc(c);
    EXPECT_EQ(cert.bracket, testing::mc_bracket_oracle(c[0], c[1], c[2], c[3]));
  }
}

TEST(Twisted, ParametrisationLandsInMC) {
  EXPECT_EQ(d_st(1, 0), LieElement::generator(G::MuBar));
  EXPECT_EQ(d_st(0, 1), LieElement::generator(G::Mu));
  EXPECT_EQ(d_st(1, 1).value(), total_differential());
  EXPECT_EQ(d_st(2, 1).value(), 8 * gen(G::MuBar) + 4 * gen(G::DelBar) + 2 * gen(G::Del) + gen(G::Mu));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 25; ++trial) {
    const Scalar s = trial % 5 == 0 ? Scalar(0) : random_scalar(rng);
    const Scalar t = trial % 7 == 0 ? Scalar(0) : random_scalar(rng);
    const G1Coords c = g1_coordinates(d_st(s, t));
    EXPECT_TRUE(is_mc(c).is_mc);
    const Scalar lambda = random_scalar(rng);
    EXPECT_TRUE(is_mc({lambda * c[0], lambda * c[1], lambda * c[2], lambda * c[3]}).is_mc);
  }
}

TEST(Twisted, RecoverParameters) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar y = random_scalar(rng);
    // Points with x = 1 are forced onto d_{1,y} by the quadrics.
    const MCPoint p({1, y, y * y, y * y * y});
    EXPECT_EQ(recover_parameters(p), (std::pair<Scalar, Scalar>{1, y}));
    const Scalar w = random_nonzero_scalar(rng);
    const MCPoint q({0, 0, 0, w});
    EXPECT_EQ(q.element().value(), w * d_st(0, 1).value());
  }
  EXPECT_EQ(recover_parameters(MCPoint({0, 0, 0, 0})), (std::pair<Scalar, Scalar>{0, 0}));
  EXPECT_EQ(recover_parameters(MCPoint({8, 4, 2, 1})), (std::pair<Scalar, Scalar>{2, 1}));
  EXPECT_FALSE(recover_parameters(MCPoint({27, 18, 12, 8})));
}

TEST(Companion, Examples) {
  const Scalar i = Scalar::i();
  EXPECT_EQ(dJ_st(1, 1).value(),
            i * (3 * gen(G::MuBar) + gen(G::DelBar) - gen(G::Del) - 3 * gen(G::Mu)));
  const MCCertificate c = is_mc(g1_coordinates(dJ_st(1, 1)));
  EXPECT_FALSE(c.is_mc);
  for (const auto& b : c.bracket) EXPECT_FALSE(b.is_zero());
}

TEST(Companion, SpansKernelOfAdjoint) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar s = random_nonzero_scalar(rng);
    const Scalar t = random_nonzero_scalar(rng);
    const auto kernel = h1_kernel(s, t);
    ASSERT_EQ(kernel.size(), 2u);
    std::vector<LieElement> all = kernel;
    all.push_back(d_st(s, t));
    all.push_back(dJ_st(s, t));
    EXPECT_EQ(span_rank({d_st(s, t), dJ_st(s, t)}), 2u);
    EXPECT_EQ(span_rank(all), 2u);
  }
}

TEST(Tangent, ClosedIndependentSpanning) {
  const auto [ds, dt] = tangent_basis(1, 1);
  EXPECT_EQ(ds.value(), 3 * gen(G::MuBar) + 2 * gen(G::DelBar) + gen(G::Del));
  EXPECT_EQ(dt.value(), 3 * gen(G::Mu) + 2 * gen(G::Del) + gen(G::DelBar));
  const auto [s0, t0] = tangent_basis(1, 0);
  EXPECT_EQ(s0.value(), 3 * gen(G::MuBar));
  EXPECT_EQ(t0.value(), gen(G::DelBar));
  EXPECT_THROW(tangent_basis(0, 0), DegeneratePoint);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Scalar s = random_nonzero_scalar(rng);
    const Scalar t = random_scalar(rng);
    const auto [a, b] = tangent_basis(s, t);
    const LieElement dst = d_st(s, t);
    EXPECT_TRUE(bracket(dst, a).is_zero());
    EXPECT_TRUE(bracket(dst, b).is_zero());
    std::vector<LieElement> all = h1_kernel(s, t);
    const std::size_t kdim = all.size();
    EXPECT_EQ(span_rank({a, b}), 2u);
    all.push_back(a);
    all.push_back(b);
    EXPECT_EQ(span_rank(all), kdim);
    EXPECT_EQ(kdim, 2u);
  }
}

TEST(Conjugation, RealStructure) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const bool real = trial < 10;
    const Scalar s = random_scalar(rng, !real);
    const Scalar t = random_scalar(rng, !real);
    EXPECT_EQ(conjugate(g1_coordinates(d_st(s, t))), g1_coordinates(d_st(t.conj(), s.conj())));
    EXPECT_EQ(conjugate(g1_coordinates(dJ_st(s, t))), g1_coordinates(dJ_st(t.conj(), s.conj())));
    EXPECT_EQ(is_conjugation_fixed(g1_coordinates(d_st(s, t))),
              is_conjugation_fixed(g1_coordinates(dJ_st(s, t))));
    // t = conj(s) gives fixed points of both.
    EXPECT_TRUE(is_conjugation_fixed(g1_coordinates(d_st(s, s.conj()))));
    EXPECT_TRUE(is_conjugation_fixed(g1_coordinates(dJ_st(s, s.conj()))));
  }
  EXPECT_TRUE(is_conjugation_fixed(g1_coordinates(d_st(1, 1))));
}

TEST(Phi, IntertwinesOnA) {
  EXPECT_TRUE(phi_conjugation_check(1, 1, 3).passed);
  EXPECT_TRUE(phi_conjugation_check(2, 1, 4).passed);
  EXPECT_THROW(phi_conjugation_check(0, 1, 2), DegeneratePoint);
  EXPECT_EQ(phi_scalar(2, 3, {1, 1}), Scalar(8 * 27));
}

TEST(Phi, CohomologyIsInvariant) {
  const LieElement d = d_st(1, 1);
  const LieElement dst = d_st(Scalar::rational(1, 2), Scalar(mpq_class(1), mpq_class(2)));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(cohomology(dst, k, Carrier::g()).dim(), cohomology(d, k, Carrier::g()).dim()) << k;
  }
}

TEST(Strata, Nullity) {
  EXPECT_EQ(strata_nullity(1, 1), 0u);
  EXPECT_EQ(strata_nullity(1, 0), 1u);
  EXPECT_EQ(strata_nullity(0, 1), 1u);
  EXPECT_EQ(strata_nullity(0, 0), 2u);
  EXPECT_EQ(h1_kernel(0, 0).size(), 4u);
}

}  // namespace
}  // namespace acalg
