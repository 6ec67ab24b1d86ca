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

#include "acalg/lie.hpp"

#include <mutex>

namespace acalg {

// ---------------------------------------------------------------------------
// BracketExpr

BracketExpr BracketExpr::leaf(Generator g) {
  auto node = std::make_shared<Node>();
  node->generator = g;
  node->in_h = is_del_type(g);
  return BracketExpr(std::move(node));
}

BracketExpr BracketExpr::bracket(const BracketExpr& left, const BracketExpr& right) {
  auto node = std::make_shared<Node>();
  node->is_leaf = false;
  node->left = left.node_;
  node->right = right.node_;
  node->degree = left.degree() + right.degree();
  node->in_h = left.in_h() && right.in_h();
  return BracketExpr(std::move(node));
}

AlgebraElement BracketExpr::evaluate() const {
  if (is_leaf()) return AlgebraElement::generator(generator());
  return graded_commutator(left().evaluate(), right().evaluate());
}

std::string BracketExpr::to_string() const {
  if (is_leaf()) return std::string(name(generator()));
  return "[" + left().to_string() + "," + right().to_string() + "]";
}

AlgebraElement evaluate(const LieCombination& combination) {
  AlgebraElement out;
  for (const auto& [c, e] : combination) out += c * e.evaluate();
  return out;
}

// ---------------------------------------------------------------------------
// Coordinates

SparseVector coordinates_in_A(const AlgebraElement& a, int k) {
  SparseVector v;
  // Terms are ordered by (degree, tail, head), which is basis_A order.
  for (const auto& [m, c] : a.terms()) {
    if (m.degree() != k) {
      throw NonHomogeneousOperand("expected degree " + std::to_string(k) + " element, got '" +
                                  a.to_string() + "'");
    }
    v.push_back(index_in_A(m), c);
  }
  return v;
}

AlgebraElement element_from_A_coordinates(const SparseVector& v, int k) {
  const auto basis = basis_A(k);
  AlgebraElement out;
  for (const auto& [i, c] : v.entries()) {
    if (i >= basis.size()) throw DimensionMismatch("coordinate index outside A_k");
    out.add_term(basis[i], c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lie bases

std::optional<SparseVector> LieBasis::coordinates(const AlgebraElement& a) const {
  if (a.is_zero()) return SparseVector{};
  auto deg = a.homogeneous_degree();
  if (!deg || *deg != degree_) return std::nullopt;
  return span_.express(coordinates_in_A(a, degree_));
}

class LieBasisCache {
 public:
  static LieBasisCache& instance() {
    static LieBasisCache cache;
    return cache;
  }

  const LieBasis& get(int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<int>(bases_.size()) < k) {
      bases_.push_back(build(static_cast<int>(bases_.size()) + 1));
    }
    return *bases_[k - 1];
  }

 private:
  std::unique_ptr<LieBasis> build(int k) {
    auto basis = std::make_unique<LieBasis>();
    basis->degree_ = k;
    if (k == 1) {
      for (Generator g : kGenerators) {
        basis->elements_.push_back(LieElement::generator(g));
        basis->expressions_.push_back(BracketExpr::leaf(g));
        basis->span_.insert(coordinates_in_A(AlgebraElement::generator(g), 1));
      }
      return basis;
    }
    const LieBasis& prev = *bases_[k - 2];
    for (Generator g : {Generator::DelBar, Generator::Del}) {
      const AlgebraElement gen = AlgebraElement::generator(g);
      for (std::size_t i = 0; i < prev.size(); ++i) {
        AlgebraElement value = graded_commutator(gen, prev.elements_[i].value());
        if (value.is_zero()) continue;
        if (basis->span_.insert(coordinates_in_A(value, k))) continue;  // dependent
        basis->elements_.push_back(LieElement(std::move(value), k));
        basis->expressions_.push_back(
            BracketExpr::bracket(BracketExpr::leaf(g), prev.expressions_[i]));
      }
    }
    // Ids of the echelon must match basis positions for express().
    Echelon clean;
    for (const auto& e : basis->elements_) clean.insert(coordinates_in_A(e.value(), k));
    basis->span_ = std::move(clean);
    return basis;
  }

  std::mutex mutex_;
  std::vector<std::unique_ptr<LieBasis>> bases_;
};

const LieBasis& lie_basis_data(int k) {
  if (k <= 0) throw InvalidDegree("g_k needs k >= 1, got " + std::to_string(k));
  if (k > NormalMonomial::kMaxHeadLength) throw InvalidDegree("degree too large");
  return LieBasisCache::instance().get(k);
}

std::vector<LieElement> lie_basis(int k) { return lie_basis_data(k).elements(); }

std::size_t dim_g(int k) { return lie_basis_data(k).size(); }

std::vector<LieElement> h_basis(int k) {
  if (k <= 0) throw InvalidDegree("h_k needs k >= 1, got " + std::to_string(k));
  if (k >= 2) return lie_basis(k);
  return {LieElement::generator(Generator::DelBar), LieElement::generator(Generator::Del)};
}

std::size_t dim_h(int k) { return h_basis(k).size(); }

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::generator(Generator g) { return LieElement(AlgebraElement::generator(g), 1); }

LieElement LieElement::certify(const AlgebraElement& value) {
  auto deg = value.homogeneous_degree();
  if (!deg) {
    if (value.is_zero()) throw NotInLieAlgebra("zero element needs an explicit degree");
    throw NonHomogeneousOperand("Lie elements are homogeneous: '" + value.to_string() + "'");
  }
  return certify(value, *deg);
}

LieElement LieElement::certify(const AlgebraElement& value, int degree) {
  if (degree <= 0) throw InvalidDegree("Lie elements have degree >= 1");
  if (!value.is_zero()) {
    auto deg = value.homogeneous_degree();
    if (!deg) throw NonHomogeneousOperand("Lie elements are homogeneous: '" + value.to_string() + "'");
    if (*deg != degree) {
      throw NotInLieAlgebra("element '" + value.to_string() + "' has degree " +
                            std::to_string(*deg) + ", expected " + std::to_string(degree));
    }
    if (!lie_basis_data(degree).contains(value)) {
      throw NotInLieAlgebra("'" + value.to_string() + "' is not in g_" + std::to_string(degree));
    }
  }
  return LieElement(value, degree);
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  return LieElement::certify(graded_commutator(a.value(), b.value()), a.degree() + b.degree());
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

LieCombination derivation_on_generator(Derivation which, Generator g) {
  const BracketExpr delbar = BracketExpr::leaf(Generator::DelBar);
  const BracketExpr del = BracketExpr::leaf(Generator::Del);
  const Scalar minus_half = Scalar::rational(-1, 2);
  if (which == Derivation::MuBar) {
    if (g == Generator::DelBar) return {};
    if (g == Generator::Del) return {{minus_half, BracketExpr::bracket(delbar, delbar)}};
  } else {
    if (g == Generator::DelBar) return {{minus_half, BracketExpr::bracket(del, del)}};
    if (g == Generator::Del) return {};
  }
  throw OutOfDomain("derivation applied to " + std::string(name(g)) + " outside h");
}

LieCombination apply_tree(Derivation which, const BracketExpr& e) {
  if (e.is_leaf()) return derivation_on_generator(which, e.generator());
  const BracketExpr x = e.left();
  const BracketExpr y = e.right();
  // D[x,y] = [Dx,y] + (-1)^{|x|}[x,Dy]
  LieCombination out;
  for (const auto& [c, dx] : apply_tree(which, x)) out.emplace_back(c, BracketExpr::bracket(dx, y));
  const Scalar sign = x.degree() % 2 == 0 ? Scalar(1) : Scalar(-1);
  for (const auto& [c, dy] : apply_tree(which, y)) {
    out.emplace_back(sign * c, BracketExpr::bracket(x, dy));
  }
  return out;
}

}  // namespace

LieCombination derivation_apply(Derivation which, const BracketExpr& h) {
  if (h.is_leaf() && h.generator() == Generator::MuBar && which == Derivation::Mu) {
    // D_mu(D_mubar) = -[del, delbar]
    return {{Scalar(-1), BracketExpr::bracket(BracketExpr::leaf(Generator::Del),
                                              BracketExpr::leaf(Generator::DelBar))}};
  }
  if (!h.in_h()) throw OutOfDomain("derivations act on h; got " + h.to_string());
  return apply_tree(which, h);
}

LieCombination derivation_apply(Derivation which, const LieCombination& h) {
  LieCombination out;
  for (const auto& [c, e] : h) {
    for (auto& [c2, e2] : derivation_apply(which, e)) out.emplace_back(c * c2, std::move(e2));
  }
  return out;
}

LieElement derivation_value(Derivation which, const BracketExpr& h) {
  return LieElement::certify(evaluate(derivation_apply(which, h)), h.degree() + 1);
}

// ---------------------------------------------------------------------------
// g_hol

std::string HolElement::to_string() const {
  AlgebraElement e = delbar * AlgebraElement::generator(Generator::DelBar) +
                     del * AlgebraElement::generator(Generator::Del);
  return e.to_string();
}

HolElement project_hol(const LieElement& a) {
  if (a.degree() != 1) return {};
  return {a.value().coefficient(*NormalMonomial::from_word(Word{Generator::DelBar})),
          a.value().coefficient(*NormalMonomial::from_word(Word{Generator::Del}))};
}

}  // namespace acalg
