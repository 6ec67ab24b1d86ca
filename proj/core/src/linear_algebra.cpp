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

#include "acalg/linear_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "acalg/errors.hpp"

namespace acalg {

// ---------------------------------------------------------------------------
// SparseVector

SparseVector SparseVector::unit(std::size_t index, const Scalar& value) {
  SparseVector v;
  v.push_back(index, value);
  return v;
}

Scalar SparseVector::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it == entries_.end() || it->first != index) return {};
  return it->second;
}

void SparseVector::push_back(std::size_t index, const Scalar& value) {
  if (value.is_zero()) return;
  if (!entries_.empty() && entries_.back().first >= index) {
    throw DimensionMismatch("SparseVector::push_back out of order");
  }
  entries_.emplace_back(index, value);
}

void SparseVector::set(std::size_t index, const Scalar& value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) {
    if (value.is_zero()) {
      entries_.erase(it);
    } else {
      it->second = value;
    }
  } else if (!value.is_zero()) {
    entries_.insert(it, Entry(index, value));
  }
}

void SparseVector::axpy(const Scalar& factor, const SparseVector& other) {
  if (factor.is_zero() || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Scalar s = a->second + factor * b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector& SparseVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns) {
  ExactMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c].entries()) {
      if (r >= rows) throw DimensionMismatch("column entry outside matrix");
      m.at(r, c) = v;
    }
  }
  return m;
}

SparseVector ExactMatrix::column(std::size_t c) const {
  SparseVector v;
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(r, at(r, c));
  return v;
}

SparseVector ExactMatrix::row(std::size_t r) const {
  SparseVector v;
  for (std::size_t c = 0; c < cols_; ++c) v.push_back(c, at(r, c));
  return v;
}

std::vector<SparseVector> ExactMatrix::columns() const {
  std::vector<SparseVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  ExactMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o.at(k, c);
        if (!b.is_zero()) out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o * Scalar(-1); }

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
  ExactMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

SparseVector ExactMatrix::apply(const SparseVector& v) const {
  std::vector<Scalar> acc(rows_);
  for (const auto& [c, x] : v.entries()) {
    if (c >= cols_) throw DimensionMismatch("vector longer than matrix width");
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = at(r, c);
      if (!a.is_zero()) acc[r] += a * x;
    }
  }
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(r, acc[r]);
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }

// Exact division in Z[i]; the quotient is known to be integral.
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  if (sgn(b.im) == 0) {
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  mpz_class norm = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  GaussInt q;
  mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), norm.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), norm.get_mpz_t());
  return q;
}

std::size_t bareiss_rank(std::vector<std::vector<GaussInt>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  GaussInt prev{1, 0};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const GaussInt& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const GaussInt factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        GaussInt v = mul(pivot, a[i][j]);
        if (!factor.is_zero() && !a[r][j].is_zero()) v = sub(v, mul(factor, a[r][j]));
        a[i][j] = v.is_zero() ? GaussInt{} : divexact(v, prev);
      }
      a[i][c] = GaussInt{};
    }
    prev = pivot;
    ++r;
  }
  return r;
}

// Union-find over rows (0..R-1) and columns (R..R+C-1).
class Components {
 public:
  explicit Components(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t rank_bareiss(const ExactMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  Components comp(R + C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      if (!m.at(r, c).is_zero()) comp.unite(r, R + c);

  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t r = 0; r < R; ++r) blocks[comp.find(r)].first.push_back(r);
  for (std::size_t c = 0; c < C; ++c) blocks[comp.find(R + c)].second.push_back(c);

  std::size_t total = 0;
  for (const auto& [root, block] : blocks) {
    const auto& [rows, cols] = block;
    if (rows.empty() || cols.empty()) continue;
    std::vector<std::vector<GaussInt>> a(rows.size(), std::vector<GaussInt>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      mpz_class lcm = 1;
      for (std::size_t c : cols) {
        const Scalar& s = m.at(rows[i], c);
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.re().get_den_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.im().get_den_mpz_t());
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Scalar& s = m.at(rows[i], cols[j]);
        a[i][j].re = s.re().get_num() * (lcm / s.re().get_den());
        a[i][j].im = s.im().get_num() * (lcm / s.im().get_den());
      }
    }
    total += bareiss_rank(std::move(a));
  }
  return total;
}

std::size_t rank_column_echelon(const ExactMatrix& m) { return rank(m.columns()); }

std::size_t rank(const std::vector<SparseVector>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

// ---------------------------------------------------------------------------
// Echelon

const Echelon::Row* Echelon::row_for_pivot(std::size_t index) const {
  auto it = pivots_.find(index);
  return it == pivots_.end() ? nullptr : &rows_[it->second];
}

void Echelon::reduce_in_place(SparseVector& v, SparseVector* combo) const {
  // Stored rows have their pivot as leading entry, so clearing pivot
  // positions in increasing order never reintroduces an earlier one.
  std::size_t cursor = 0;
  while (true) {
    const Row* row = nullptr;
    Scalar value;
    for (const auto& [idx, val] : v.entries()) {
      if (idx < cursor) continue;
      if ((row = row_for_pivot(idx))) {
        value = val;
        cursor = idx + 1;
        break;
      }
    }
    if (!row) return;
    Scalar factor = -(value / row->vec.leading_value());
    v.axpy(factor, row->vec);
    if (combo) combo->axpy(factor, row->combo);
  }
}

std::optional<SparseVector> Echelon::insert(const SparseVector& v) {
  const std::size_t id = next_id_++;
  SparseVector vec = v;
  SparseVector combo = SparseVector::unit(id);
  reduce_in_place(vec, &combo);
  if (vec.is_zero()) return combo;
  pivots_.emplace(vec.leading_index(), rows_.size());
  rows_.push_back({std::move(vec), std::move(combo)});
  return std::nullopt;
}

bool Echelon::contains(const SparseVector& v) const { return reduce(v).is_zero(); }

SparseVector Echelon::reduce(const SparseVector& v) const {
  SparseVector out = v;
  reduce_in_place(out, nullptr);
  return out;
}

std::optional<SparseVector> Echelon::express(const SparseVector& v) const {
  SparseVector rest = v;
  SparseVector combo;
  reduce_in_place(rest, &combo);
  if (!rest.is_zero()) return std::nullopt;
  combo *= Scalar(-1);
  return combo;
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& columns) {
  Echelon e;
  std::vector<SparseVector> out;
  for (const auto& c : columns) {
    if (auto relation = e.insert(c)) out.push_back(std::move(*relation));
  }
  return out;
}

}  // namespace acalg
