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

#ifndef ACALG_ALGEBRA_HPP
#define ACALG_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "acalg/alphabet.hpp"
#include "acalg/errors.hpp"
#include "acalg/scalar.hpp"

namespace acalg {

/// An element of A: a finite combination of normal monomials. Zero
/// coefficients are never stored, so equal elements have identical maps.
class AlgebraElement {
 public:
  using Terms = std::map<NormalMonomial, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  AlgebraElement(long c) : AlgebraElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static AlgebraElement monomial(const NormalMonomial& m, const Scalar& coeff = 1);
  static AlgebraElement generator(Generator g);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const NormalMonomial& m) const;

  /// Distinct total degrees present (empty for zero).
  std::set<int> degrees() const;
  /// The single total degree, or nullopt when zero or mixed.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  bool in_B() const;

  void add_term(const NormalMonomial& m, const Scalar& coeff);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Scalar& c);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(long c, AlgebraElement a) { return a *= Scalar(c); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  /// "coeff*m1.m2 + coeff*m3 - ..." in monomial order; zero renders as "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Product in A. Concatenation followed by normalisation.
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

class NotInSubalgebra : public Error {
 public:
  NotInSubalgebra(const std::string& message, AlgebraElement offending)
      : Error("NotInSubalgebra", message), offending_(std::move(offending)) {}
  /// The part of the rejected element with a nonempty tail.
  const AlgebraElement& offending() const { return offending_; }

 private:
  AlgebraElement offending_;
};

// ---------------------------------------------------------------------------
// Rewriting system

struct RewriteRule {
  Generator left;
  Generator right;
  /// Replacement terms (integer coefficient, word).
  std::vector<std::pair<int, Word>> replacement;
  /// The defining relation this rule orients.
  std::string relation;
};

/// The seven rules: mubar.mubar, mu.mu, mubar.delbar, mu.del, mubar.del,
/// mu.delbar, mu.mubar.
const std::vector<RewriteRule>& rewrite_rules();

/// Rule whose left side is the letter pair (a, b), if any.
const RewriteRule* find_rule(Generator a, Generator b);

enum class RewriteStrategy { LeftmostInnermost, RightmostOutermost };

/// Normal form of a word by applying the rules, one redex at a time, in the
/// given strategy until no redex remains.
AlgebraElement rewrite(std::span<const Generator> word,
                       RewriteStrategy strategy = RewriteStrategy::LeftmostInnermost);

/// Normal form of a word computed by folding left multiplications by
/// generators from the right. Used by product(); agrees with rewrite().
AlgebraElement normal_form(std::span<const Generator> word);

/// Lexicographic termination measure: (mu-type letters, sum over mu-type
/// letters of del-type letters to their right, mu-before-mubar inversions).
std::tuple<int, int, int> termination_measure(std::span<const Generator> word);

// ---------------------------------------------------------------------------
// Products, brackets, bases

AlgebraElement left_multiply(Generator g, const AlgebraElement& a);
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

/// ab - (-1)^{|a||b|} ba. Throws NonHomogeneousOperand on mixed degrees.
AlgebraElement graded_commutator(const AlgebraElement& a, const AlgebraElement& b);

/// Bidegree of a word (componentwise sum).
inline Bidegree word_bidegree(std::span<const Generator> word) { return bidegree(word); }

/// All normal monomials of total degree k: grouped by tail (1 < mubar < mu <
/// mubar.mu), heads lexicographic with delbar < del inside each group.
std::vector<NormalMonomial> basis_A(int k);
/// Words of length k over {delbar, del}, lexicographic.
std::vector<NormalMonomial> basis_B(int k);
std::uint64_t dim_A(int k);
std::uint64_t dim_B(int k);
/// Position of a degree-k monomial in basis_A(k) / basis_B(k).
std::size_t index_in_A(const NormalMonomial& m);
std::size_t index_in_B(const NormalMonomial& m);

/// Returns `a` when every monomial has an empty tail; throws NotInSubalgebra
/// carrying the offending terms otherwise.
AlgebraElement restrict_to_B(const AlgebraElement& a);

/// The element d = mubar + delbar + del + mu.
AlgebraElement total_differential();

}  // namespace acalg

#endif  // ACALG_ALGEBRA_HPP
