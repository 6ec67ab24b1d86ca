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

// The Maurer-Cartan locus {a in g_1 : [a,a] = 0}, its twisted-cubic
// parametrisation and the objects attached to each point.

#ifndef ACALG_MC_HPP
#define ACALG_MC_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acalg/lie.hpp"
#include "acalg/representation.hpp"

namespace acalg {

/// Coordinates (x, y, z, w) of x*mubar + y*delbar + z*del + w*mu.
using G1Coords = std::array<Scalar, 4>;

LieElement g1_element(const G1Coords& c);
/// Throws InvalidDegree unless a has degree 1.
G1Coords g1_coordinates(const LieElement& a);

struct MCCertificate {
  bool is_mc = false;
  /// xz - y^2, yw - z^2, xw - yz
  std::array<Scalar, 3> quadrics;
  /// [a,a] in the basis ([delbar,delbar], [delbar,del], [del,del]).
  std::array<Scalar, 3> bracket;
};

/// Quadric verdict cross-checked against the expansion of [a,a]. Throws
/// InternalInconsistency if they disagree.
MCCertificate is_mc(const G1Coords& c);

/// A point of the Maurer-Cartan cone; construction checks the quadrics.
class MCPoint {
 public:
  /// Throws OutOfDomain when the point is not Maurer-Cartan.
  explicit MCPoint(const G1Coords& c);
  const G1Coords& coords() const { return coords_; }
  LieElement element() const { return g1_element(coords_); }

 private:
  G1Coords coords_;
};

/// s^3 mubar + s^2 t delbar + s t^2 del + t^3 mu
LieElement d_st(const Scalar& s, const Scalar& t);
/// i (3 s^3 mubar + s^2 t delbar - s t^2 del - 3 t^3 mu)
LieElement dJ_st(const Scalar& s, const Scalar& t);

/// (d/ds d_{s,t}, d/dt d_{s,t}). Throws DegeneratePoint at (0,0).
std::pair<LieElement, LieElement> tangent_basis(const Scalar& s, const Scalar& t);

/// Basis of ker(ad_{d_{s,t}} : g_1 -> g_2), which is H^1 since g_0 = 0.
std::vector<LieElement> h1_kernel(const Scalar& s, const Scalar& t);
std::vector<LieElement> h1_kernel(const MCPoint& p);

/// Nullity of project_hol on H^1(g, ad_p).
std::size_t hol_nullity(const MCPoint& p);

/// Nullity of project_hol restricted to H^1(g, d_{s,t}).
std::size_t strata_nullity(const Scalar& s, const Scalar& t);

/// (s, t) with d_{s,t} equal to the point, when it is presented with x = 1
/// or w = 1 (or is zero); nullopt otherwise.
std::optional<std::pair<Scalar, Scalar>> recover_parameters(const MCPoint& p);

/// Complex conjugation on g_1 in the real structure exchanging
/// mubar <-> mu and delbar <-> del.
G1Coords conjugate(const G1Coords& c);
bool is_conjugation_fixed(const G1Coords& c);

struct PhiReport {
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;
};

/// Checks phi d = d_{s,t} phi, where phi scales bidegree (p,q) by
/// s^{p+2q} t^{2p+q}, on every basis monomial of A up to degree k_max, both
/// for left multiplication and for the adjoint action. Throws
/// DegeneratePoint when st = 0.
PhiReport phi_conjugation_check(const Scalar& s, const Scalar& t, int k_max);
/// Same identity on a representation: act(d_{s,t}) phi = phi act(d).
PhiReport phi_conjugation_check(const Scalar& s, const Scalar& t, const BigradedRep& r);

/// The scalar by which phi_{s,t} acts on bidegree (p,q).
Scalar phi_scalar(const Scalar& s, const Scalar& t, Bidegree b);

}  // namespace acalg

#endif  // ACALG_MC_HPP
