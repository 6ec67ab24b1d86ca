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

#include "acalg/representation.hpp"

#include <set>

#include "json.hpp"

namespace acalg {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// BigradedRep

std::size_t BigradedRep::add_vector(const std::string& label, Bidegree bidegree) {
  if (label.empty()) throw SchemaError("vector labels must be nonempty");
  if (has_label(label)) throw LabelClash("duplicate vector label '" + label + "'");
  index_.emplace(label, vectors_.size());
  vectors_.push_back({label, bidegree});
  return vectors_.size() - 1;
}

std::size_t BigradedRep::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw SchemaError("unknown vector label '" + label + "'");
  return it->second;
}

void BigradedRep::set_action(Generator g, const std::string& from, const std::string& to,
                             const Scalar& coeff) {
  const std::size_t i = index_of(from);
  const std::size_t j = index_of(to);
  const Bidegree shift = vectors_[j].bidegree - vectors_[i].bidegree;
  if (shift != bidegree(g)) {
    throw SchemaError(std::string(name(g)) + " maps '" + from + "' to '" + to + "' with shift (" +
                      std::to_string(shift.p) + "," + std::to_string(shift.q) + "), expected (" +
                      std::to_string(bidegree(g).p) + "," + std::to_string(bidegree(g).q) + ")");
  }
  Action& a = actions_[static_cast<int>(g)];
  if (coeff.is_zero()) {
    a.erase({i, j});
  } else {
    a[{i, j}] = coeff;
  }
}

ExactMatrix BigradedRep::matrix(Generator g) const {
  ExactMatrix m(dim(), dim());
  for (const auto& [ij, c] : action(g)) m.at(ij.second, ij.first) = c;
  return m;
}

namespace {

void require_keys(const json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) throw SchemaError(where + " is missing key '" + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!required.count(key) && !optional.count(key)) {
      throw SchemaError(where + " has unknown key '" + key + "'");
    }
  }
}

Scalar coefficient_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) throw SchemaError(where + ": coeff must be a string or an integer");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(where + ": bad coefficient '" + v.get<std::string>() + "': " + e.what());
  }
}

}  // namespace

BigradedRep BigradedRep::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  require_keys(doc, {"vectors", "actions"}, {}, "representation");
  if (!doc["vectors"].is_array()) throw SchemaError("'vectors' must be an array");
  if (!doc["actions"].is_object()) throw SchemaError("'actions' must be an object");

  // Schema pass over everything before any semantic check.
  struct Pending {
    Generator g;
    std::string from, to;
    Scalar coeff;
    std::string where;
  };
  std::vector<std::pair<std::string, Bidegree>> vectors;
  std::vector<Pending> entries;
  std::size_t n = 0;
  for (const auto& v : doc["vectors"]) {
    const std::string where = "vectors[" + std::to_string(n++) + "]";
    require_keys(v, {"label", "p", "q"}, {}, where);
    if (!v["label"].is_string()) throw SchemaError(where + ": label must be a string");
    if (!v["p"].is_number_integer() || !v["q"].is_number_integer()) {
      throw SchemaError(where + ": p and q must be integers");
    }
    vectors.emplace_back(v["label"].get<std::string>(), Bidegree{v["p"].get<int>(), v["q"].get<int>()});
  }
  for (const auto& [key, list] : doc["actions"].items()) {
    Generator g;
    if (key == "mubar") {
      g = Generator::MuBar;
    } else if (key == "delbar") {
      g = Generator::DelBar;
    } else if (key == "del") {
      g = Generator::Del;
    } else if (key == "mu") {
      g = Generator::Mu;
    } else {
      throw SchemaError("actions has unknown generator '" + key + "'");
    }
    if (!list.is_array()) throw SchemaError("actions." + key + " must be an array");
    std::size_t m = 0;
    for (const auto& e : list) {
      const std::string where = "actions." + key + "[" + std::to_string(m++) + "]";
      require_keys(e, {"from", "to", "coeff"}, {}, where);
      if (!e["from"].is_string() || !e["to"].is_string()) {
        throw SchemaError(where + ": from and to must be strings");
      }
      entries.push_back({g, e["from"].get<std::string>(), e["to"].get<std::string>(),
                         coefficient_from_json(e["coeff"], where), where});
    }
  }

  BigradedRep r;
  for (const auto& [label, bd] : vectors) {
    if (r.has_label(label)) throw SchemaError("duplicate vector label '" + label + "'");
    r.add_vector(label, bd);
  }
  std::set<std::tuple<int, std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (!r.has_label(e.from)) throw SchemaError(e.where + ": unknown vector '" + e.from + "'");
    if (!r.has_label(e.to)) throw SchemaError(e.where + ": unknown vector '" + e.to + "'");
    if (!seen.emplace(static_cast<int>(e.g), r.index_of(e.from), r.index_of(e.to)).second) {
      throw SchemaError(e.where + ": duplicate entry " + e.from + " -> " + e.to);
    }
  }
  for (const auto& e : entries) {
    try {
      r.set_action(e.g, e.from, e.to, e.coeff);
    } catch (const SchemaError& err) {
      throw SchemaError(e.where + ": bidegree violation: " + err.what());
    }
  }
  return r;
}

std::string BigradedRep::to_json() const {
  json doc;
  doc["vectors"] = json::array();
  for (const auto& v : vectors_) {
    json jv;
    jv["label"] = v.label;
    jv["p"] = v.bidegree.p;
    jv["q"] = v.bidegree.q;
    doc["vectors"].push_back(jv);
  }
  doc["actions"] = json::object();
  for (Generator g : kGenerators) {
    json list = json::array();
    for (const auto& [ij, c] : action(g)) {
      json e;
      e["from"] = vectors_[ij.first].label;
      e["to"] = vectors_[ij.second].label;
      e["coeff"] = c.to_string();
      list.push_back(e);
    }
    doc["actions"][std::string(name(g))] = list;
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Relations and action

ExactMatrix act(const BigradedRep& r, std::span<const Generator> word) {
  ExactMatrix out = ExactMatrix::identity(r.dim());
  for (Generator g : word) out = out * r.matrix(g);
  return out;
}

std::vector<RelationViolation> verify_relations(const BigradedRep& r) {
  std::vector<RelationViolation> out;
  for (const auto& rule : rewrite_rules()) {
    const Word lhs{rule.left, rule.right};
    ExactMatrix m = act(r, lhs);
    for (const auto& [c, w] : rule.replacement) m = m - act(r, w) * Scalar(c);
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const SparseVector col = m.column(j);
      if (col.is_zero()) continue;
      std::string image;
      for (const auto& [i, c] : col.entries()) {
        if (!image.empty()) image += " + ";
        image += "(" + c.to_string() + ")*" + r.vector(i).label;
      }
      out.push_back({rule.relation, r.vector(j).label, image});
    }
  }
  return out;
}

ExactMatrix act(const BigradedRep& r, const AlgebraElement& a) {
  if (a.size() == 1) {
    const auto& [m, c] = *a.terms().begin();
    return act(r, m.letters()) * c;
  }
  if (a.is_zero()) return ExactMatrix(r.dim(), r.dim());
  const auto violations = verify_relations(r);
  if (!violations.empty()) {
    throw UnverifiedRep("representation violates " + violations.front().relation + " on '" +
                        violations.front().vector + "'; only single words may act");
  }
  ExactMatrix out(r.dim(), r.dim());
  for (const auto& [m, c] : a.terms()) out = out + act(r, m.letters()) * c;
  return out;
}

BigradedRep build_example_rep(const Scalar& alpha, const Scalar& beta, const Scalar& gamma) {
  using G = Generator;
  BigradedRep r;
  r.add_vector("x", {0, 0});
  r.add_vector("mubar_x", {-1, 2});
  r.add_vector("delbar_x", {0, 1});
  r.add_vector("del_x", {1, 0});
  r.add_vector("mu_x", {2, -1});
  r.add_vector("delbar2_x", {0, 2});
  r.add_vector("delbar_del_x", {1, 1});
  r.add_vector("del2_x", {2, 0});
  r.set_action(G::MuBar, "x", "mubar_x", 1);
  r.set_action(G::DelBar, "x", "delbar_x", 1);
  r.set_action(G::Del, "x", "del_x", 1);
  r.set_action(G::Mu, "x", "mu_x", 1);

  r.set_action(G::DelBar, "delbar_x", "delbar2_x", 1);
  r.set_action(G::Del, "del_x", "del2_x", 1);
  r.set_action(G::DelBar, "del_x", "delbar_del_x", 1);
  r.set_action(G::Del, "delbar_x", "delbar_del_x", -1);

  const Scalar half = Scalar::rational(1, 2);
  r.set_action(G::MuBar, "del_x", "delbar2_x", -half - alpha);
  r.set_action(G::Del, "mubar_x", "delbar2_x", -half + alpha);
  r.set_action(G::MuBar, "mu_x", "delbar_del_x", beta);
  r.set_action(G::Mu, "mubar_x", "delbar_del_x", -beta);
  r.set_action(G::Mu, "delbar_x", "del2_x", -half - gamma);
  r.set_action(G::DelBar, "mu_x", "del2_x", -half + gamma);
  return r;
}

std::vector<std::pair<std::string, AlgebraElement>> quotient_basis() {
  using G = Generator;
  const auto gen = [](G g) { return AlgebraElement::generator(g); };
  return {{"mubar", gen(G::MuBar)},
          {"delbar", gen(G::DelBar)},
          {"del", gen(G::Del)},
          {"mu", gen(G::Mu)},
          {"[del,del]", graded_commutator(gen(G::Del), gen(G::Del))},
          {"[delbar,delbar]", graded_commutator(gen(G::DelBar), gen(G::DelBar))}};
}

std::vector<std::pair<std::string, AlgebraElement>> ideal_generators() {
  using G = Generator;
  const AlgebraElement db = AlgebraElement::generator(G::DelBar);
  const AlgebraElement d = AlgebraElement::generator(G::Del);
  const AlgebraElement dd = graded_commutator(d, db);
  return {{"[del,delbar]", dd},
          {"[delbar,[delbar,del]]", graded_commutator(db, graded_commutator(db, d))},
          {"[del,[delbar,del]]", graded_commutator(d, graded_commutator(db, d))}};
}

bool quotient_faithfulness(const BigradedRep& r) {
  const AlgebraElement ideal = ideal_generators().front().second;
  if (!act(r, ideal).is_zero()) throw IdealNotKilled("[del,delbar] acts nontrivially");
  std::vector<SparseVector> flattened;
  for (const auto& [label, e] : quotient_basis()) {
    const ExactMatrix m = act(r, e);
    SparseVector v;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(i * m.cols() + j, m.at(i, j));
    }
    flattened.push_back(std::move(v));
  }
  return rank(flattened) == flattened.size();
}

BigradedRep direct_sum(const BigradedRep& r1, const BigradedRep& r2, bool rename) {
  BigradedRep out;
  for (const auto& v : r1.vectors()) out.add_vector(v.label, v.bidegree);
  std::vector<std::string> labels2;
  for (const auto& v : r2.vectors()) {
    std::string label = v.label;
    if (out.has_label(label)) {
      if (!rename) throw LabelClash("label '" + label + "' occurs in both summands");
      while (out.has_label(label)) label += "_2";
    }
    out.add_vector(label, v.bidegree);
    labels2.push_back(label);
  }
  for (Generator g : kGenerators) {
    for (const auto& [ij, c] : r1.action(g)) {
      out.set_action(g, r1.vector(ij.first).label, r1.vector(ij.second).label, c);
    }
    for (const auto& [ij, c] : r2.action(g)) out.set_action(g, labels2[ij.first], labels2[ij.second], c);
  }
  return out;
}

std::vector<std::pair<int, std::size_t>> rep_cohomology(const BigradedRep& r, const LieElement& a) {
  if (a.degree() != 1) throw InvalidDegree("rep cohomology needs a degree-1 element");
  ExactMatrix m(r.dim(), r.dim());
  for (const auto& [mono, c] : a.value().terms()) m = m + r.matrix(mono.letters().front()) * c;
  if (!(m * m).is_zero()) {
    throw NotADifferential("the action of " + a.to_string() + " does not square to zero");
  }

  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < r.dim(); ++i) by_degree[r.vector(i).bidegree.total()].push_back(i);
  auto restricted = [&](int from, int to) {
    std::vector<SparseVector> cols;
    if (!by_degree.count(from)) return cols;
    std::map<std::size_t, std::size_t> target_pos;
    if (by_degree.count(to)) {
      for (std::size_t t = 0; t < by_degree[to].size(); ++t) target_pos[by_degree[to][t]] = t;
    }
    for (std::size_t j : by_degree[from]) {
      SparseVector v;
      const SparseVector col = m.column(j);
      for (const auto& [i, c] : col.entries()) v.set(target_pos.at(i), c);
      cols.push_back(std::move(v));
    }
    return cols;
  };
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [n, idx] : by_degree) {
    const std::size_t ker = kernel_basis(restricted(n, n + 1)).size();
    const std::size_t im = rank(restricted(n - 1, n));
    out.emplace_back(n, ker - im);
  }
  return out;
}

}  // namespace acalg
