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

// The graded Lie algebra g of primitives inside A, its ideal h generated by
// delbar and del, the abelian quotient g_hol, and the derivations of the
// semidirect-product model.

#ifndef ACALG_LIE_HPP
#define ACALG_LIE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acalg/algebra.hpp"
#include "acalg/linear_algebra.hpp"

namespace acalg {

/// Immutable binary bracket tree over the generators, e.g. [del,[delbar,del]].
class BracketExpr {
 public:
  static BracketExpr leaf(Generator g);
  static BracketExpr bracket(const BracketExpr& left, const BracketExpr& right);

  bool is_leaf() const { return node_->is_leaf; }
  Generator generator() const { return node_->generator; }
  BracketExpr left() const { return BracketExpr(node_->left); }
  BracketExpr right() const { return BracketExpr(node_->right); }
  int degree() const { return node_->degree; }
  /// True when every leaf is delbar or del.
  bool in_h() const { return node_->in_h; }

  /// The element of A obtained by evaluating each bracket as a graded
  /// commutator.
  AlgebraElement evaluate() const;
  std::string to_string() const;

 private:
  struct Node {
    bool is_leaf = true;
    Generator generator = Generator::DelBar;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    int degree = 1;
    bool in_h = true;
  };
  explicit BracketExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Formal linear combination of bracket trees.
using LieCombination = std::vector<std::pair<Scalar, BracketExpr>>;

AlgebraElement evaluate(const LieCombination& combination);

/// An element of g_k for k >= 1, certified to lie in the span of
/// lie_basis(k) when constructed.
class LieElement {
 public:
  /// Throws NotInLieAlgebra (or NonHomogeneousOperand) on failure. Zero
  /// needs the explicit-degree overload.
  static LieElement certify(const AlgebraElement& value);
  static LieElement certify(const AlgebraElement& value, int degree);
  static LieElement generator(Generator g);

  const AlgebraElement& value() const { return value_; }
  int degree() const { return degree_; }
  bool is_zero() const { return value_.is_zero(); }
  /// Whether the element lies in the ideal h (no tails in its normal form).
  bool in_h() const { return value_.in_B(); }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  friend class LieBasisCache;
  LieElement(AlgebraElement value, int degree) : value_(std::move(value)), degree_(degree) {}
  AlgebraElement value_;
  int degree_ = 1;
};

/// Coordinates of a homogeneous element of degree k in basis_A(k).
SparseVector coordinates_in_A(const AlgebraElement& a, int k);
/// Inverse of coordinates_in_A.
AlgebraElement element_from_A_coordinates(const SparseVector& v, int k);

/// Basis of g_k: the four generators for k = 1, otherwise a maximal
/// independent subset of {[g, b] : g in (delbar, del), b in lie_basis(k-1)}
/// chosen greedily in that enumeration order.
class LieBasis {
 public:
  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<LieElement>& elements() const { return elements_; }
  const std::vector<BracketExpr>& expressions() const { return expressions_; }
  /// Coordinates of a degree-k element of A in this basis, or nullopt if it
  /// is not in g_k.
  std::optional<SparseVector> coordinates(const AlgebraElement& a) const;
  bool contains(const AlgebraElement& a) const { return coordinates(a).has_value(); }

 private:
  friend class LieBasisCache;
  int degree_ = 0;
  std::vector<LieElement> elements_;
  std::vector<BracketExpr> expressions_;
  Echelon span_;
};

/// Memoised per degree behind a mutex; safe to call from several threads.
/// Throws InvalidDegree for k <= 0.
const LieBasis& lie_basis_data(int k);
std::vector<LieElement> lie_basis(int k);
std::size_t dim_g(int k);

/// Basis of h_k: (delbar, del) in degree 1, lie_basis(k) above.
std::vector<LieElement> h_basis(int k);
std::size_t dim_h(int k);

/// Graded commutator, re-certified in degree |a| + |b|.
LieElement bracket(const LieElement& a, const LieElement& b);

enum class Derivation { MuBar, Mu };

/// Applies D_mubar or D_mu in the semidirect-product model: defining values
/// on delbar, del (and D_mu on the symbol D_mubar, written as the bare leaf
/// mubar) extended by the graded Leibniz rule. Works purely on bracket trees
/// in delbar and del. Throws OutOfDomain outside h.
LieCombination derivation_apply(Derivation which, const BracketExpr& h);
LieCombination derivation_apply(Derivation which, const LieCombination& h);
/// Evaluated and certified result.
LieElement derivation_value(Derivation which, const BracketExpr& h);

/// An element of the two-dimensional abelian algebra g_hol (degree 1).
struct HolElement {
  Scalar delbar;
  Scalar del;

  bool is_zero() const { return delbar.is_zero() && del.is_zero(); }
  friend bool operator==(const HolElement&, const HolElement&) = default;
  std::string to_string() const;
};

/// The quotient map f: g -> g_hol killing mubar and mu. Zero in degree >= 2.
HolElement project_hol(const LieElement& a);

}  // namespace acalg

#endif  // ACALG_LIE_HPP
