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

#include "acalg/homology.hpp"

namespace acalg {

namespace {

using G = Generator;

NormalMonomial mono(std::initializer_list<Generator> letters) {
  return *NormalMonomial::from_word(Word(letters));
}

bool all_zero(const std::array<Scalar, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

}  // namespace

LieElement g1_element(const G1Coords& c) {
  AlgebraElement a;
  for (std::size_t i = 0; i < 4; ++i) a += c[i] * AlgebraElement::generator(kGenerators[i]);
  return LieElement::certify(a, 1);
}

G1Coords g1_coordinates(const LieElement& a) {
  if (a.degree() != 1) throw InvalidDegree("expected an element of g_1");
  G1Coords c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = a.value().coefficient(mono({kGenerators[i]}));
  return c;
}

MCCertificate is_mc(const G1Coords& c) {
  const auto& [x, y, z, w] = c;
  MCCertificate cert;
  cert.quadrics = {x * z - y * y, y * w - z * z, x * w - y * z};

  const AlgebraElement aa = graded_commutator(g1_element(c).value(), g1_element(c).value());
  const Scalar half = Scalar::rational(1, 2);
  cert.bracket = {aa.coefficient(mono({G::DelBar, G::DelBar})) * half,
                  aa.coefficient(mono({G::DelBar, G::Del})),
                  aa.coefficient(mono({G::Del, G::Del})) * half};
  const AlgebraElement db = AlgebraElement::generator(G::DelBar);
  const AlgebraElement d = AlgebraElement::generator(G::Del);
  const AlgebraElement rebuilt = cert.bracket[0] * graded_commutator(db, db) +
                                 cert.bracket[1] * graded_commutator(db, d) +
                                 cert.bracket[2] * graded_commutator(d, d);
  if (rebuilt != aa) {
    throw InternalInconsistency("[a,a] is not in span{[delbar,delbar],[delbar,del],[del,del]}");
  }
  cert.is_mc = all_zero(cert.quadrics);
  if (cert.is_mc != all_zero(cert.bracket)) {
    throw InternalInconsistency("quadric and bracket verdicts disagree for " + g1_element(c).to_string());
  }
  return cert;
}

MCPoint::MCPoint(const G1Coords& c) : coords_(c) {
  if (!is_mc(c).is_mc) throw OutOfDomain("not a Maurer-Cartan point: " + g1_element(c).to_string());
}

LieElement d_st(const Scalar& s, const Scalar& t) {
  return g1_element({s * s * s, s * s * t, s * t * t, t * t * t});
}

LieElement dJ_st(const Scalar& s, const Scalar& t) {
  const Scalar i = Scalar::i();
  return g1_element({i * 3 * s * s * s, i * s * s * t, -i * s * t * t, -i * 3 * t * t * t});
}

std::pair<LieElement, LieElement> tangent_basis(const Scalar& s, const Scalar& t) {
  if (s.is_zero() && t.is_zero()) throw DegeneratePoint("tangent basis is undefined at (0,0)");
  return {g1_element({3 * s * s, 2 * s * t, t * t, Scalar(0)}),
          g1_element({Scalar(0), s * s, 2 * s * t, 3 * t * t})};
}

std::vector<LieElement> h1_kernel(const Scalar& s, const Scalar& t) {
  return h1_kernel(MCPoint(g1_coordinates(d_st(s, t))));
}

std::vector<LieElement> h1_kernel(const MCPoint& p) {
  const GradedMap ad = ad_matrix(p.element(), 1, Carrier::g());
  std::vector<LieElement> out;
  for (const auto& v : kernel_basis(ad.columns)) {
    out.push_back(LieElement::certify(Carrier::g().element(v, 1), 1));
  }
  return out;
}

std::size_t strata_nullity(const Scalar& s, const Scalar& t) {
  return hol_nullity(MCPoint(g1_coordinates(d_st(s, t))));
}

std::size_t hol_nullity(const MCPoint& p) {
  const auto kernel = h1_kernel(p);
  std::vector<SparseVector> images;
  for (const auto& k : kernel) {
    const HolElement h = project_hol(k);
    SparseVector v;
    v.push_back(0, h.delbar);
    v.push_back(1, h.del);
    images.push_back(std::move(v));
  }
  return kernel.size() - rank(images);
}

std::optional<std::pair<Scalar, Scalar>> recover_parameters(const MCPoint& p) {
  const auto& [x, y, z, w] = p.coords();
  std::optional<std::pair<Scalar, Scalar>> st;
  if (x.is_zero() && y.is_zero() && z.is_zero() && w.is_zero()) {
    st = std::pair<Scalar, Scalar>{0, 0};
  } else if (x.is_one()) {
    st = std::pair<Scalar, Scalar>{1, y};
  } else if (w.is_one()) {
    st = std::pair<Scalar, Scalar>{z, 1};
  }
  if (st && g1_coordinates(d_st(st->first, st->second)) != p.coords()) {
    throw InternalInconsistency("Maurer-Cartan point is off the twisted cubic");
  }
  return st;
}

G1Coords conjugate(const G1Coords& c) {
  return {c[3].conj(), c[2].conj(), c[1].conj(), c[0].conj()};
}

bool is_conjugation_fixed(const G1Coords& c) { return conjugate(c) == c; }

Scalar phi_scalar(const Scalar& s, const Scalar& t, Bidegree b) {
  return s.pow(b.p + 2 * b.q) * t.pow(2 * b.p + b.q);
}

namespace {

AlgebraElement apply_phi(const Scalar& s, const Scalar& t, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, c * phi_scalar(s, t, m.bidegree()));
  return out;
}

void require_invertible(const Scalar& s, const Scalar& t) {
  if (s.is_zero() || t.is_zero()) throw DegeneratePoint("phi_{s,t} needs st != 0");
}

}  // namespace

PhiReport phi_conjugation_check(const Scalar& s, const Scalar& t, int k_max) {
  require_invertible(s, t);
  if (k_max < 0) throw InvalidDegree("negative degree bound");
  const AlgebraElement d = total_differential();
  const AlgebraElement dst = d_st(s, t).value();
  PhiReport report;
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& m : basis_A(k)) {
      const AlgebraElement x = AlgebraElement::monomial(m);
      const AlgebraElement phx = apply_phi(s, t, x);
      ++report.checks;
      if (apply_phi(s, t, product(d, x)) != product(dst, phx)) {
        report.passed = false;
        report.failure = "left multiplication on " + m.to_string();
        return report;
      }
      ++report.checks;
      if (apply_phi(s, t, graded_commutator(d, x)) != graded_commutator(dst, phx)) {
        report.passed = false;
        report.failure = "adjoint action on " + m.to_string();
        return report;
      }
    }
  }
  return report;
}

PhiReport phi_conjugation_check(const Scalar& s, const Scalar& t, const BigradedRep& r) {
  require_invertible(s, t);
  const G1Coords c = g1_coordinates(d_st(s, t));
  ExactMatrix act_d(r.dim(), r.dim());
  ExactMatrix act_dst(r.dim(), r.dim());
  for (std::size_t i = 0; i < 4; ++i) {
    const ExactMatrix m = r.matrix(kGenerators[i]);
    act_d = act_d + m;
    act_dst = act_dst + m * c[i];
  }
  ExactMatrix phi(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) phi.at(i, i) = phi_scalar(s, t, r.vector(i).bidegree);
  PhiReport report;
  report.checks = 1;
  if (act_dst * phi != phi * act_d) {
    report.passed = false;
    report.failure = "act(d_{s,t}) phi != phi act(d)";
  }
  return report;
}

}  // namespace acalg
