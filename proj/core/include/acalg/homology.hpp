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

// Cohomology of inner differentials ad_a = [a, -] on graded carriers.

#ifndef ACALG_HOMOLOGY_HPP
#define ACALG_HOMOLOGY_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acalg/algebra.hpp"
#include "acalg/lie.hpp"
#include "acalg/linear_algebra.hpp"

namespace acalg {

enum class CarrierKind { G, H, B, A, Zero };

/// A graded space on which ad_a acts: g, its ideal h, B = U(h), all of A,
/// or the zero space. Degree 0 is zero for g and h and span{1} for B and A.
class Carrier {
 public:
  explicit Carrier(CarrierKind kind) : kind_(kind) {}
  static Carrier g() { return Carrier(CarrierKind::G); }
  static Carrier h() { return Carrier(CarrierKind::H); }
  static Carrier B() { return Carrier(CarrierKind::B); }
  static Carrier A() { return Carrier(CarrierKind::A); }
  static Carrier zero() { return Carrier(CarrierKind::Zero); }
  /// "g", "h", "B", "A", "0". Throws OutOfDomain on anything else.
  static Carrier parse(const std::string& text);

  CarrierKind kind() const { return kind_; }
  std::string name() const;
  int min_degree() const;

  std::vector<AlgebraElement> basis(int k) const;
  std::size_t dim(int k) const;
  /// Coordinates in basis(k). Throws NotInSubalgebra / NotInLieAlgebra when
  /// the element is outside the carrier.
  SparseVector coordinates(const AlgebraElement& a, int k) const;
  AlgebraElement element(const SparseVector& v, int k) const;

 private:
  CarrierKind kind_;
};

/// Matrix of a linear map between graded pieces in the carriers' bases.
struct GradedMap {
  int source_degree = 0;
  std::vector<AlgebraElement> source_basis;
  std::vector<AlgebraElement> target_basis;
  ExactMatrix matrix;
  std::vector<SparseVector> columns;
};

/// Matrix of x -> [a, x] from carrier_k to carrier_{k+1}. `a` has degree 1.
GradedMap ad_matrix(const LieElement& a, int k, const Carrier& carrier);

/// H^k(carrier, ad_a) with representatives.
///
/// Representatives complete the image to the kernel greedily in kernel-basis
/// order and are reduced modulo the image, so outputs are reproducible.
class CohomologyGroup {
 public:
  int degree() const { return degree_; }
  std::size_t dim() const { return representatives_.size(); }
  std::size_t kernel_dim() const { return kernel_dim_; }
  std::size_t image_dim() const { return image_dim_; }
  const std::vector<AlgebraElement>& representatives() const { return representatives_; }
  const std::vector<AlgebraElement>& kernel_basis() const { return kernel_; }
  const Carrier& carrier() const { return carrier_; }

  /// Whether the element is in the image of ad_a from degree-1.
  bool is_boundary(const AlgebraElement& x) const;
  /// Coordinates of the class of a cycle in the representative basis; the
  /// element must be a cycle (checked by the caller) lying in the carrier.
  std::vector<Scalar> class_of(const AlgebraElement& cycle) const;
  /// Rank of the classes of the given cycles in this group.
  std::size_t class_rank(const std::vector<AlgebraElement>& cycles) const;

 private:
  friend class CohomologyComputer;
  explicit CohomologyGroup(Carrier c) : carrier_(c) {}

  Carrier carrier_;
  int degree_ = 0;
  std::size_t kernel_dim_ = 0;
  std::size_t image_dim_ = 0;
  std::vector<AlgebraElement> representatives_;
  std::vector<AlgebraElement> kernel_;
  std::shared_ptr<const Echelon> boundaries_;
  std::shared_ptr<const Echelon> boundaries_then_reps_;
};

/// Throws NotADifferential if [a, a] != 0, InvalidDegree for bad degrees.
CohomologyGroup cohomology(const LieElement& a, int k, const Carrier& carrier);
/// H^k for k = carrier.min_degree() .. k_max, sharing the ad matrices.
std::vector<CohomologyGroup> cohomology_table(const LieElement& a, int k_max,
                                              const Carrier& carrier);

/// g_hol with the zero differential: 2-dimensional in degree 1, else zero.
std::size_t hol_cohomology_dim(int k);

/// The decomposition B_k = del B_{k-1} + delbar B_{k-1}: returns (x, y) with
/// b = del*x + delbar*y. Throws InvalidDegree for k = 0 and NotInSubalgebra
/// when b is not in B_k.
std::pair<AlgebraElement, AlgebraElement> split_B(int k, const AlgebraElement& b);

struct CheckFailure {
  std::string identity;
  int degree = 0;
  std::string witness;
};

struct LesReport {
  bool passed = true;
  int max_degree = 0;
  std::size_t matrix_identity_checks = 0;
  std::size_t skew_commutation_checks = 0;
  std::size_t exactness_nodes = 0;
  std::vector<std::size_t> cohomology_dims;  // H^0 .. H^max of (B, ad_mubar)
  /// Degrees j where H^j ~ H^{j-1} through delta (j even) or delbar (j odd).
  std::vector<int> iso_degrees;
  std::optional<CheckFailure> failure;
};

/// Verifies, for all degrees up to k_max: the block form of ad_mubar under
/// B_k = del B_{k-1} + delbar B_{k-1}; skew-commutation of ad_mubar with left
/// multiplication by delbar; exactness of the long exact sequence
/// ... -> H^{j-1} -(delbar)-> H^j -(delta)-> H^{j-1} -(-delbar)-> H^j -> ...
/// at every node. Throws InvalidDegree for k_max < 2.
LesReport les_check(int k_max);

/// Dimensions of H(H(carrier, ad_mubar), ad_delbar) in degrees
/// carrier.min_degree() .. k_max. Throws NotWellDefined if ad_delbar fails to
/// preserve ad_mubar cycles or boundaries.
std::vector<std::size_t> frolicher_E1(const Carrier& carrier, int k_max);

/// For the cohomology of (B, ad_mubar): coefficient lambda with
/// rep_j * rep_l = lambda * rep_{j+l} in cohomology, for all j + l <= k_max.
struct RingProductCheck {
  int left_degree = 0;
  int right_degree = 0;
  Scalar coefficient;
};
std::vector<RingProductCheck> B_cohomology_products(int k_max);

}  // namespace acalg

#endif  // ACALG_HOMOLOGY_HPP
