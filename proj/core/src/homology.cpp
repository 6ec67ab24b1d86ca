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

#include "acalg/homology.hpp"

#include <map>

namespace acalg {

// ---------------------------------------------------------------------------
// Carrier

Carrier Carrier::parse(const std::string& text) {
  if (text == "g") return g();
  if (text == "h") return h();
  if (text == "B") return B();
  if (text == "A") return A();
  if (text == "0" || text == "zero") return zero();
  throw OutOfDomain("unknown carrier '" + text + "' (expected g, h, B, A or 0)");
}

std::string Carrier::name() const {
  switch (kind_) {
    case CarrierKind::G: return "g";
    case CarrierKind::H: return "h";
    case CarrierKind::B: return "B";
    case CarrierKind::A: return "A";
    case CarrierKind::Zero: return "0";
  }
  return "?";
}

int Carrier::min_degree() const {
  return kind_ == CarrierKind::G || kind_ == CarrierKind::H ? 1 : 0;
}

std::vector<AlgebraElement> Carrier::basis(int k) const {
  std::vector<AlgebraElement> out;
  if (k < min_degree() || kind_ == CarrierKind::Zero) return out;
  switch (kind_) {
    case CarrierKind::G:
      for (const auto& e : lie_basis(k)) out.push_back(e.value());
      break;
    case CarrierKind::H:
      for (const auto& e : h_basis(k)) out.push_back(e.value());
      break;
    case CarrierKind::B:
      for (const auto& m : basis_B(k)) out.push_back(AlgebraElement::monomial(m));
      break;
    case CarrierKind::A:
      for (const auto& m : basis_A(k)) out.push_back(AlgebraElement::monomial(m));
      break;
    case CarrierKind::Zero:
      break;
  }
  return out;
}

std::size_t Carrier::dim(int k) const {
  if (k < min_degree() || kind_ == CarrierKind::Zero) return 0;
  switch (kind_) {
    case CarrierKind::G: return dim_g(k);
    case CarrierKind::H: return dim_h(k);
    case CarrierKind::B: return dim_B(k);
    case CarrierKind::A: return dim_A(k);
    case CarrierKind::Zero: return 0;
  }
  return 0;
}

SparseVector Carrier::coordinates(const AlgebraElement& a, int k) const {
  if (a.is_zero()) return {};
  auto deg = a.homogeneous_degree();
  if (!deg || *deg != k) {
    throw NonHomogeneousOperand("expected an element of degree " + std::to_string(k) + ", got '" +
                                a.to_string() + "'");
  }
  switch (kind_) {
    case CarrierKind::A:
      return coordinates_in_A(a, k);
    case CarrierKind::B: {
      SparseVector v;
      for (const auto& [m, c] : a.terms()) {
        if (!m.in_B()) throw NotInSubalgebra("'" + a.to_string() + "' is not in B", a);
        v.set(index_in_B(m), c);
      }
      return v;
    }
    case CarrierKind::H:
      if (k == 1) {
        SparseVector v;
        for (const auto& [m, c] : a.terms()) {
          if (!m.in_B()) throw NotInLieAlgebra("'" + a.to_string() + "' is not in h_1");
          v.set(m.head_letter(0) == Generator::DelBar ? 0 : 1, c);
        }
        return v;
      }
      [[fallthrough]];
    case CarrierKind::G: {
      auto v = lie_basis_data(k).coordinates(a);
      if (!v) throw NotInLieAlgebra("'" + a.to_string() + "' is not in g_" + std::to_string(k));
      return *v;
    }
    case CarrierKind::Zero:
      break;
  }
  throw OutOfDomain("nonzero element '" + a.to_string() + "' in the zero carrier");
}

AlgebraElement Carrier::element(const SparseVector& v, int k) const {
  if (v.is_zero()) return {};
  const auto b = basis(k);
  AlgebraElement out;
  for (const auto& [i, c] : v.entries()) {
    if (i >= b.size()) throw DimensionMismatch("coordinate index outside the carrier basis");
    out += c * b[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// ad matrices and cohomology

namespace {

void require_degree_one(const LieElement& a) {
  if (a.degree() != 1) {
    throw InvalidDegree("inner differentials need a degree-1 element, got degree " +
                        std::to_string(a.degree()));
  }
}

std::vector<SparseVector> ad_columns(const AlgebraElement& a, int k, const Carrier& carrier) {
  std::vector<SparseVector> cols;
  for (const auto& x : carrier.basis(k)) {
    cols.push_back(carrier.coordinates(graded_commutator(a, x), k + 1));
  }
  return cols;
}

bool is_cycle(const AlgebraElement& a, const AlgebraElement& x) {
  return graded_commutator(a, x).is_zero();
}

}  // namespace

GradedMap ad_matrix(const LieElement& a, int k, const Carrier& carrier) {
  require_degree_one(a);
  if (k < 0) throw InvalidDegree("negative degree " + std::to_string(k));
  GradedMap map;
  map.source_degree = k;
  map.source_basis = carrier.basis(k);
  map.target_basis = carrier.basis(k + 1);
  map.columns = ad_columns(a.value(), k, carrier);
  map.matrix = ExactMatrix::from_columns(map.target_basis.size(), map.columns);
  return map;
}

/// Caches ad columns per degree for one (a, carrier) pair.
class CohomologyComputer {
 public:
  CohomologyComputer(const LieElement& a, const Carrier& carrier) : a_(a), carrier_(carrier) {
    require_degree_one(a);
    if (!graded_commutator(a.value(), a.value()).is_zero()) {
      throw NotADifferential("[a,a] != 0 for a = " + a.to_string());
    }
  }

  const std::vector<SparseVector>& columns(int k) {
    auto it = columns_.find(k);
    if (it == columns_.end()) it = columns_.emplace(k, ad_columns(a_.value(), k, carrier_)).first;
    return it->second;
  }

  std::shared_ptr<Echelon> boundaries(int k) {
    auto e = std::make_shared<Echelon>();
    if (k - 1 >= 0) {
      for (const auto& c : columns(k - 1)) e->insert(c);
    }
    return e;
  }

  CohomologyGroup group(int k) {
    if (k < 0) throw InvalidDegree("negative degree " + std::to_string(k));
    CohomologyGroup g(carrier_);
    g.degree_ = k;
    const auto kernel = kernel_basis(columns(k));
    g.kernel_dim_ = kernel.size();
    auto image = boundaries(k);
    g.image_dim_ = image->rank();
    auto both = std::make_shared<Echelon>(*image);
    for (const auto& kv : kernel) {
      g.kernel_.push_back(carrier_.element(kv, k));
      if (both->contains(kv)) continue;
      SparseVector rep = image->reduce(kv);
      both->insert(rep);
      g.representatives_.push_back(carrier_.element(rep, k));
    }
    if (g.kernel_dim_ != g.image_dim_ + g.representatives_.size()) {
      throw InternalInconsistency("image of ad is not contained in its kernel in degree " +
                                  std::to_string(k));
    }
    g.boundaries_ = image;
    g.boundaries_then_reps_ = both;
    return g;
  }

 private:
  LieElement a_;
  Carrier carrier_;
  std::map<int, std::vector<SparseVector>> columns_;
};

bool CohomologyGroup::is_boundary(const AlgebraElement& x) const {
  return boundaries_->contains(carrier_.coordinates(x, degree_));
}

std::vector<Scalar> CohomologyGroup::class_of(const AlgebraElement& cycle) const {
  auto combo = boundaries_then_reps_->express(carrier_.coordinates(cycle, degree_));
  if (!combo) throw OutOfDomain("'" + cycle.to_string() + "' is not a cycle");
  std::vector<Scalar> out(dim());
  const std::size_t offset = boundaries_->inserted();
  for (const auto& [id, c] : combo->entries()) {
    if (id >= offset) out.at(id - offset) = c;
  }
  return out;
}

std::size_t CohomologyGroup::class_rank(const std::vector<AlgebraElement>& cycles) const {
  Echelon e = *boundaries_;
  const std::size_t before = e.rank();
  for (const auto& c : cycles) e.insert(carrier_.coordinates(c, degree_));
  return e.rank() - before;
}

CohomologyGroup cohomology(const LieElement& a, int k, const Carrier& carrier) {
  CohomologyComputer computer(a, carrier);
  return computer.group(k);
}

std::vector<CohomologyGroup> cohomology_table(const LieElement& a, int k_max,
                                              const Carrier& carrier) {
  CohomologyComputer computer(a, carrier);
  std::vector<CohomologyGroup> out;
  for (int k = carrier.min_degree(); k <= k_max; ++k) out.push_back(computer.group(k));
  return out;
}

std::size_t hol_cohomology_dim(int k) {
  if (k < 0) throw InvalidDegree("negative degree " + std::to_string(k));
  return k == 1 ? 2 : 0;
}

// ---------------------------------------------------------------------------
// B_k = del B_{k-1} + delbar B_{k-1}

std::pair<AlgebraElement, AlgebraElement> split_B(int k, const AlgebraElement& b) {
  if (k <= 0) throw InvalidDegree("split_B needs k >= 1, got " + std::to_string(k));
  AlgebraElement x, y;
  for (const auto& [m, c] : b.terms()) {
    if (!m.in_B()) throw NotInSubalgebra("'" + b.to_string() + "' is not in B", b);
    if (m.degree() != k) {
      throw NotInSubalgebra("'" + b.to_string() + "' is not in B_" + std::to_string(k), b);
    }
    (m.head_letter(0) == Generator::Del ? x : y).add_term(m.drop_first(), c);
  }
  return {x, y};
}

namespace {

AlgebraElement delta(int k, const AlgebraElement& b) {
  if (b.is_zero()) return {};
  return split_B(k, b).first;
}

AlgebraElement delbar_left(const AlgebraElement& b) { return left_multiply(Generator::DelBar, b); }

}  // namespace

LesReport les_check(int k_max) {
  if (k_max < 2) throw InvalidDegree("les_check needs k >= 2, got " + std::to_string(k_max));
  LesReport report;
  report.max_degree = k_max;
  const AlgebraElement mubar = AlgebraElement::generator(Generator::MuBar);
  auto fail = [&](std::string identity, int degree, std::string witness) {
    report.passed = false;
    report.failure = CheckFailure{std::move(identity), degree, std::move(witness)};
    return report;
  };

  // (a) block form of ad_mubar
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& m : basis_B(k)) {
      const AlgebraElement b = AlgebraElement::monomial(m);
      const auto [x, y] = split_B(k, b);
      const auto [x2, y2] = split_B(k + 1, graded_commutator(mubar, b));
      ++report.matrix_identity_checks;
      if (x2 != -graded_commutator(mubar, x)) {
        return fail("delta-component of [mubar, del*x + delbar*y] = -[mubar, x]", k, m.to_string());
      }
      if (y2 != -(delbar_left(x) + graded_commutator(mubar, y))) {
        return fail("delbar-component of [mubar, del*x + delbar*y] = -(delbar*x + [mubar, y])", k,
                    m.to_string());
      }
    }
  }

  // (b) ad_mubar(delbar*y) = -delbar*ad_mubar(y)
  for (int j = 0; j < k_max; ++j) {
    for (const auto& m : basis_B(j)) {
      const AlgebraElement y = AlgebraElement::monomial(m);
      ++report.skew_commutation_checks;
      if (graded_commutator(mubar, delbar_left(y)) != -delbar_left(graded_commutator(mubar, y))) {
        return fail("[mubar, delbar*y] = -delbar*[mubar, y]", j + 1, m.to_string());
      }
    }
  }

  // (c) exactness
  CohomologyComputer computer(LieElement::generator(Generator::MuBar), Carrier::B());
  std::vector<CohomologyGroup> H;
  for (int j = 0; j <= k_max; ++j) {
    H.push_back(computer.group(j));
    report.cohomology_dims.push_back(H.back().dim());
  }

  auto L_reps = [&](int j) {
    std::vector<AlgebraElement> out;
    for (const auto& z : H[j].representatives()) out.push_back(delbar_left(z));
    return out;
  };
  auto delta_reps = [&](int j) {
    std::vector<AlgebraElement> out;
    for (const auto& z : H[j].representatives()) out.push_back(delta(j, z));
    return out;
  };

  // Well-definedness on cycles and boundaries.
  for (int j = 0; j <= k_max; ++j) {
    if (j + 1 <= k_max) {
      for (const auto& w : L_reps(j)) {
        if (!is_cycle(mubar, w)) return fail("delbar maps cycles to cycles", j, w.to_string());
      }
      for (const auto& c : j >= 1 ? computer.columns(j - 1) : std::vector<SparseVector>{}) {
        const AlgebraElement bd = Carrier::B().element(c, j);
        if (!H[j + 1].is_boundary(delbar_left(bd))) {
          return fail("delbar maps boundaries to boundaries", j, bd.to_string());
        }
      }
    }
    if (j >= 1) {
      for (const auto& w : delta_reps(j)) {
        if (!is_cycle(mubar, w)) return fail("delta maps cycles to cycles", j, w.to_string());
      }
      for (const auto& c : computer.columns(j - 1)) {
        const AlgebraElement bd = Carrier::B().element(c, j);
        if (!H[j - 1].is_boundary(delta(j, bd))) {
          return fail("delta maps boundaries to boundaries", j, bd.to_string());
        }
      }
    }
  }

  // Node: F: H^i -> H^j followed by G: H^j -> H^l; G(F(.)) exact and ker G = im F.
  auto node = [&](const std::string& name, int j, const std::vector<AlgebraElement>& f_images,
                  const std::vector<AlgebraElement>& g_images, int l,
                  auto&& g_apply) -> bool {
    ++report.exactness_nodes;
    for (const auto& v : f_images) {
      const AlgebraElement gv = g_apply(v);
      if (!gv.is_zero() && !H[l].is_boundary(gv)) {
        fail(name + ": composite is not zero in cohomology", j, v.to_string());
        return false;
      }
    }
    const std::size_t im_f = H[j].class_rank(f_images);
    const std::size_t ker_g = H[j].dim() - H[l].class_rank(g_images);
    if (im_f != ker_g) {
      fail(name + ": dim ker " + std::to_string(ker_g) + " != dim im " + std::to_string(im_f), j,
           "H^" + std::to_string(j));
      return false;
    }
    return true;
  };

  for (int j = 0; j <= k_max; ++j) {
    // ker(delbar: H^j -> H^{j+1}) = im(delbar: H^{j-1} -> H^j)
    if (j + 1 <= k_max) {
      std::vector<AlgebraElement> f = j >= 1 ? L_reps(j - 1) : std::vector<AlgebraElement>{};
      if (!node("exactness at delbar -> delbar", j, f, L_reps(j), j + 1, delbar_left)) return report;
    }
    // ker(delta: H^j -> H^{j-1}) = im(delbar: H^{j-1} -> H^j)
    if (j >= 1) {
      auto d = [j](const AlgebraElement& v) { return delta(j, v); };
      if (!node("exactness at delbar -> delta", j, L_reps(j - 1), delta_reps(j), j - 1, d)) {
        return report;
      }
    }
    // ker(delbar: H^j -> H^{j+1}) = im(delta: H^{j+1} -> H^j)
    if (j + 1 <= k_max) {
      if (!node("exactness at delta -> delbar", j, delta_reps(j + 1), L_reps(j), j + 1,
                delbar_left)) {
        return report;
      }
    }
  }

  for (int j = 1; j <= k_max; ++j) {
    const bool even = j % 2 == 0;
    const std::size_t r = even ? H[j - 1].class_rank(delta_reps(j)) : H[j].class_rank(L_reps(j - 1));
    if (r == H[j].dim() && r == H[j - 1].dim()) {
      report.iso_degrees.push_back(j);
    } else {
      return fail(even ? "delta: H^j -> H^{j-1} is an isomorphism for even j"
                       : "delbar: H^{j-1} -> H^j is an isomorphism for odd j",
                  j, "rank " + std::to_string(r));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// E1 page

std::vector<std::size_t> frolicher_E1(const Carrier& carrier, int k_max) {
  const int lo = carrier.min_degree();
  if (k_max < lo) throw InvalidDegree("k_max below the carrier's first degree");
  std::vector<std::size_t> out;
  if (carrier.kind() == CarrierKind::Zero) return std::vector<std::size_t>(k_max - lo + 1, 0);

  const AlgebraElement mubar = AlgebraElement::generator(Generator::MuBar);
  const AlgebraElement delbar = AlgebraElement::generator(Generator::DelBar);
  CohomologyComputer computer(LieElement::generator(Generator::MuBar), carrier);
  std::vector<CohomologyGroup> H;
  for (int j = lo; j <= k_max; ++j) H.push_back(computer.group(j));
  const auto top_boundaries = computer.boundaries(k_max + 1);

  // rank of ad_delbar: H^j -> H^{j+1}
  std::vector<std::size_t> rank(k_max - lo + 1, 0);
  for (int j = lo; j <= k_max; ++j) {
    const CohomologyGroup& Hj = H[j - lo];
    std::vector<AlgebraElement> images;
    for (const auto& z : Hj.representatives()) {
      AlgebraElement w = graded_commutator(delbar, z);
      if (!is_cycle(mubar, w)) {
        throw NotWellDefined("ad_delbar does not map the cycle '" + z.to_string() + "' to a cycle");
      }
      images.push_back(std::move(w));
    }
    auto in_boundaries = [&](const AlgebraElement& w) {
      if (j + 1 <= k_max) return H[j + 1 - lo].is_boundary(w);
      return top_boundaries->contains(carrier.coordinates(w, j + 1));
    };
    if (j >= 1) {
      for (const auto& c : computer.columns(j - 1)) {
        const AlgebraElement bd = carrier.element(c, j);
        if (!in_boundaries(graded_commutator(delbar, bd))) {
          throw NotWellDefined("ad_delbar does not map the boundary '" + bd.to_string() +
                               "' to a boundary");
        }
      }
    }
    if (j + 1 <= k_max) {
      rank[j - lo] = H[j + 1 - lo].class_rank(images);
    } else {
      Echelon e = *top_boundaries;
      const std::size_t before = e.rank();
      for (const auto& w : images) e.insert(carrier.coordinates(w, j + 1));
      rank[j - lo] = e.rank() - before;
    }
  }
  for (int j = lo; j <= k_max; ++j) {
    const std::size_t incoming = j > lo ? rank[j - 1 - lo] : 0;
    out.push_back(H[j - lo].dim() - rank[j - lo] - incoming);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ring structure of H(B, ad_mubar)

std::vector<RingProductCheck> B_cohomology_products(int k_max) {
  if (k_max < 0) throw InvalidDegree("negative degree " + std::to_string(k_max));
  const AlgebraElement mubar = AlgebraElement::generator(Generator::MuBar);
  CohomologyComputer computer(LieElement::generator(Generator::MuBar), Carrier::B());
  std::vector<CohomologyGroup> H;
  for (int j = 0; j <= k_max; ++j) {
    H.push_back(computer.group(j));
    if (H.back().dim() != 1) {
      throw InternalInconsistency("H^" + std::to_string(j) + "(B, ad_mubar) is not one-dimensional");
    }
  }
  std::vector<RingProductCheck> out;
  for (int j = 0; j <= k_max; ++j) {
    for (int l = 0; j + l <= k_max; ++l) {
      const AlgebraElement p = product(H[j].representatives()[0], H[l].representatives()[0]);
      if (!is_cycle(mubar, p)) {
        throw InternalInconsistency("product of cohomology representatives is not a cycle");
      }
      out.push_back({j, l, H[j + l].class_of(p)[0]});
    }
  }
  return out;
}

}  // namespace acalg
