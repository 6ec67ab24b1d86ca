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

// Exact linear algebra over Q(i): dense matrices, sparse vectors and an
// incremental echelon basis.

#ifndef ACALG_LINEAR_ALGEBRA_HPP
#define ACALG_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acalg/scalar.hpp"

namespace acalg {

/// Sparse vector with entries sorted by index; never stores zeros.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  static SparseVector unit(std::size_t index, const Scalar& value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nonzeros() const { return entries_.size(); }
  /// Smallest index with a nonzero entry. Precondition: !is_zero().
  std::size_t leading_index() const { return entries_.front().first; }
  const Scalar& leading_value() const { return entries_.front().second; }
  Scalar get(std::size_t index) const;

  /// Appends in strictly increasing index order; zeros are skipped.
  void push_back(std::size_t index, const Scalar& value);
  void set(std::size_t index, const Scalar& value);
  /// this += factor * other.
  void axpy(const Scalar& factor, const SparseVector& other);
  SparseVector& operator*=(const Scalar& c);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) {
    a.axpy(1, b);
    return a;
  }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) {
    a.axpy(-1, b);
    return a;
  }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Dense matrix of Scalars (row-major).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  /// Columns given as sparse vectors of length `rows`.
  static ExactMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  SparseVector column(std::size_t c) const;
  SparseVector row(std::size_t r) const;
  std::vector<SparseVector> columns() const;
  bool is_zero() const;
  ExactMatrix transpose() const;

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const Scalar& c) const;
  SparseVector apply(const SparseVector& v) const;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) row elimination over the Gaussian
/// integers, after clearing denominators row by row. Blocks that do not share
/// rows or columns are eliminated independently.
std::size_t rank_bareiss(const ExactMatrix& m);
/// Rank by column echelon form over Q(i).
std::size_t rank_column_echelon(const ExactMatrix& m);
std::size_t rank(const std::vector<SparseVector>& vectors);

/// Incrementally built echelon basis of a subspace.
///
/// Every inserted vector gets an id (0, 1, ... in insertion order). Stored
/// rows remember their combination of inserted vectors, so a dependent
/// insertion yields an explicit linear relation and members of the span can
/// be expressed in the inserted vectors.
class Echelon {
 public:
  /// Inserts v. Returns nullopt when v was independent of the current span,
  /// otherwise the relation (combination of inserted ids, including v's own
  /// id with coefficient 1) that vanishes.
  std::optional<SparseVector> insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  /// Coefficients over inserted ids with sum equal to v, or nullopt.
  std::optional<SparseVector> express(const SparseVector& v) const;
  /// v minus its projection onto pivot positions (leading entry non-pivot).
  SparseVector reduce(const SparseVector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return next_id_; }

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };
  // pivot index -> position in rows_
  std::map<std::size_t, std::size_t> pivots_;
  std::vector<Row> rows_;
  std::size_t next_id_ = 0;

  const Row* row_for_pivot(std::size_t index) const;
  void reduce_in_place(SparseVector& v, SparseVector* combo) const;
};

/// Basis of the kernel of the map whose columns are given, one relation per
/// dependent column (greedy in column order).
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns);

}  // namespace acalg

#endif  // ACALG_LINEAR_ALGEBRA_HPP
