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

// Finite-dimensional bigraded representations of A.

#ifndef ACALG_REPRESENTATION_HPP
#define ACALG_REPRESENTATION_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acalg/algebra.hpp"
#include "acalg/lie.hpp"
#include "acalg/linear_algebra.hpp"

namespace acalg {

struct RepVector {
  std::string label;
  Bidegree bidegree;
};

/// Bigraded vector space with one operator per generator. Every stored
/// coefficient respects the generator's bidegree shift.
class BigradedRep {
 public:
  /// (source index, target index) -> coefficient
  using Action = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  /// Throws LabelClash on a duplicate label.
  std::size_t add_vector(const std::string& label, Bidegree bidegree);
  /// Sets g(from) to contain coeff * to (zero erases). Throws SchemaError on
  /// unknown labels or when to - from differs from bidegree(g).
  void set_action(Generator g, const std::string& from, const std::string& to, const Scalar& coeff);

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<RepVector>& vectors() const { return vectors_; }
  const RepVector& vector(std::size_t i) const { return vectors_.at(i); }
  /// Throws SchemaError when absent.
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const { return index_.count(label) != 0; }
  const Action& action(Generator g) const { return actions_[static_cast<int>(g)]; }

  /// Matrix of g: column j is the image of vector j.
  ExactMatrix matrix(Generator g) const;

  /// Validates the schema, then bidegree discipline. Throws SchemaError.
  static BigradedRep from_json(const std::string& text);
  /// Deterministic JSON (fixed key order, entries sorted by source, target).
  std::string to_json() const;

 private:
  std::vector<RepVector> vectors_;
  std::map<std::string, std::size_t> index_;
  std::array<Action, 4> actions_;
};

struct RelationViolation {
  std::string relation;
  std::string vector;
  std::string image;
};

/// Evaluates the seven defining relations as matrices; empty iff the data
/// defines a representation of A.
std::vector<RelationViolation> verify_relations(const BigradedRep& r);

/// The eight-dimensional three-parameter family.
BigradedRep build_example_rep(const Scalar& alpha, const Scalar& beta, const Scalar& gamma);

/// Composite action of a word (last letter acts first). Always allowed.
ExactMatrix act(const BigradedRep& r, std::span<const Generator> word);
/// Linear extension over the normal form. Throws UnverifiedRep when r fails
/// the relations and a is not a single monomial.
ExactMatrix act(const BigradedRep& r, const AlgebraElement& a);

/// The quotient basis {mubar, delbar, del, mu, [del,del], [delbar,delbar]}.
std::vector<std::pair<std::string, AlgebraElement>> quotient_basis();

/// Whether the quotient basis acts by linearly independent matrices. Throws
/// IdealNotKilled when [del,delbar] acts nontrivially.
bool quotient_faithfulness(const BigradedRep& r);

/// Spanning set of the ideal generated by [del,delbar] in degrees 2 and 3.
std::vector<std::pair<std::string, AlgebraElement>> ideal_generators();

/// Block-diagonal sum. Throws LabelClash on shared labels unless
/// `rename` is set, in which case clashing labels of r2 get a "_2" suffix
/// (repeated until unique).
BigradedRep direct_sum(const BigradedRep& r1, const BigradedRep& r2, bool rename = false);

/// Cohomology of the operator act(r, a) for a degree-1 element with
/// act(a)^2 = 0, graded by total degree p + q. Returns (degree, dim) pairs
/// for every total degree present. Throws NotADifferential otherwise.
std::vector<std::pair<int, std::size_t>> rep_cohomology(const BigradedRep& r, const LieElement& a);

}  // namespace acalg

#endif  // ACALG_REPRESENTATION_HPP
