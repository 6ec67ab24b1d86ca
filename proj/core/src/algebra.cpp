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

#include "acalg/algebra.hpp"

#include <algorithm>

namespace acalg {

AlgebraElement::AlgebraElement(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(NormalMonomial::unit(), c);
}

AlgebraElement AlgebraElement::monomial(const NormalMonomial& m, const Scalar& coeff) {
  AlgebraElement e;
  e.add_term(m, coeff);
  return e;
}

AlgebraElement AlgebraElement::generator(Generator g) {
  return monomial(*NormalMonomial::from_word(Word{g}));
}

Scalar AlgebraElement::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::set<int> AlgebraElement::degrees() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(m.degree());
  return out;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
  auto d = degrees();
  if (d.size() != 1) return std::nullopt;
  return *d.begin();
}

bool AlgebraElement::in_B() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_B(); });
}

void AlgebraElement::add_term(const NormalMonomial& m, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement e = *this;
  return e *= Scalar(-1);
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      coeff = (negative ? -c : c).to_string();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      Scalar mag = negative ? -c : c;
      coeff = mag.im() == 1 ? std::string("1*i") : mag.to_string();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (m.degree() > 0) out += "*" + m.to_string();
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting system

namespace {

using G = Generator;

std::vector<RewriteRule> make_rules() {
  return {
      {G::MuBar, G::MuBar, {}, "[mubar,mubar]=0"},
      {G::Mu, G::Mu, {}, "[mu,mu]=0"},
      {G::MuBar, G::DelBar, {{-1, {G::DelBar, G::MuBar}}}, "[mubar,delbar]=0"},
      {G::Mu, G::Del, {{-1, {G::Del, G::Mu}}}, "[mu,del]=0"},
      {G::MuBar, G::Del, {{-1, {G::Del, G::MuBar}}, {-1, {G::DelBar, G::DelBar}}},
       "[mubar,del]+1/2[delbar,delbar]=0"},
      {G::Mu, G::DelBar, {{-1, {G::DelBar, G::Mu}}, {-1, {G::Del, G::Del}}},
       "[mu,delbar]+1/2[del,del]=0"},
      {G::Mu, G::MuBar,
       {{-1, {G::MuBar, G::Mu}}, {-1, {G::DelBar, G::Del}}, {-1, {G::Del, G::DelBar}}},
       "[mubar,mu]+[delbar,del]=0"},
  };
}

std::optional<std::size_t> find_redex(const Word& w, RewriteStrategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == RewriteStrategy::LeftmostInnermost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (find_rule(w[i], w[i + 1])) return i;
    }
  } else {
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      if (find_rule(w[i], w[i + 1])) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = make_rules();
  return rules;
}

const RewriteRule* find_rule(Generator a, Generator b) {
  for (const auto& r : rewrite_rules()) {
    if (r.left == a && r.right == b) return &r;
  }
  return nullptr;
}

AlgebraElement rewrite(std::span<const Generator> word, RewriteStrategy strategy) {
  std::map<Word, Scalar> pending;
  pending.emplace(Word(word.begin(), word.end()), Scalar(1));
  AlgebraElement result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Scalar& c = node.mapped();
    auto at = find_redex(w, strategy);
    if (!at) {
      result.add_term(*NormalMonomial::from_word(w), c);
      continue;
    }
    const RewriteRule* rule = find_rule(w[*at], w[*at + 1]);
    for (const auto& [k, rhs] : rule->replacement) {
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*at));
      next.insert(next.end(), rhs.begin(), rhs.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*at) + 2, w.end());
      Scalar coeff = c * Scalar(k);
      auto [it, inserted] = pending.try_emplace(std::move(next), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) pending.erase(it);
      }
    }
  }
  return result;
}

std::tuple<int, int, int> termination_measure(std::span<const Generator> word) {
  int mu_letters = 0;
  int crossings = 0;
  int inversions = 0;
  int del_to_right = 0;
  int mubar_to_right = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    Generator g = word[i];
    if (is_del_type(g)) {
      ++del_to_right;
      continue;
    }
    ++mu_letters;
    crossings += del_to_right;
    if (g == Generator::Mu) inversions += mubar_to_right;
    if (g == Generator::MuBar) ++mubar_to_right;
  }
  return {mu_letters, crossings, inversions};
}

// ---------------------------------------------------------------------------
// Left multiplication

namespace {

struct TailProduct {
  int coeff;
  Word head_suffix;
  Tail tail;
};

// g * tail for g of mu type, as combinations of (head suffix) * (new tail).
std::vector<TailProduct> mu_times_tail(Generator g, Tail t) {
  if (g == G::MuBar) {
    switch (t) {
      case Tail::Empty: return {{1, {}, Tail::MuBar}};
      case Tail::Mu: return {{1, {}, Tail::MuBarMu}};
      default: return {};
    }
  }
  switch (t) {
    case Tail::Empty: return {{1, {}, Tail::Mu}};
    case Tail::MuBar:
      return {{-1, {}, Tail::MuBarMu},
              {-1, {G::DelBar, G::Del}, Tail::Empty},
              {-1, {G::Del, G::DelBar}, Tail::Empty}};
    case Tail::MuBarMu:
      return {{-1, {G::DelBar, G::Del}, Tail::Mu}, {-1, {G::Del, G::DelBar}, Tail::Mu}};
    default: return {};
  }
}

void left_multiply_monomial(Generator g, const NormalMonomial& m, const Scalar& c,
                            AlgebraElement& out) {
  if (is_del_type(g)) {
    out.add_term(m.prepend(g), c);
    return;
  }
  const Word head = m.head();
  const int n = static_cast<int>(head.size());
  // Moving g rightwards past head[i] costs a sign; at a crossing partner it
  // also emits the quadratic correction term.
  const Generator partner = g == G::MuBar ? G::Del : G::DelBar;
  const Generator square = g == G::MuBar ? G::DelBar : G::Del;
  for (int i = 0; i < n; ++i) {
    if (head[i] != partner) continue;
    Word w(head.begin(), head.begin() + i);
    w.push_back(square);
    w.push_back(square);
    w.insert(w.end(), head.begin() + i + 1, head.end());
    Scalar coeff = (i % 2 == 0) ? -c : c;
    out.add_term(NormalMonomial(w, m.tail()), coeff);
  }
  const Scalar passed = (n % 2 == 0) ? c : -c;
  const NormalMonomial bare = NormalMonomial::from_bits(n, m.head_bits(), Tail::Empty);
  for (const auto& tp : mu_times_tail(g, m.tail())) {
    out.add_term(bare.append_head(tp.head_suffix).with_tail(tp.tail), passed * Scalar(tp.coeff));
  }
}

}  // namespace

AlgebraElement left_multiply(Generator g, const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& [m, c] : a.terms()) left_multiply_monomial(g, m, c, out);
  return out;
}

AlgebraElement normal_form(std::span<const Generator> word) {
  AlgebraElement e(1);
  for (std::size_t i = word.size(); i-- > 0;) e = left_multiply(word[i], e);
  return e;
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [m, c] : a.terms()) {
    AlgebraElement e = b;
    const Word letters = m.letters();
    for (std::size_t i = letters.size(); i-- > 0;) e = left_multiply(letters[i], e);
    e *= c;
    out += e;
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return product(a, b); }

AlgebraElement graded_commutator(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.is_homogeneous() || !b.is_homogeneous()) {
    throw NonHomogeneousOperand("graded commutator needs homogeneous operands, got '" +
                                a.to_string() + "' and '" + b.to_string() + "'");
  }
  if (a.is_zero() || b.is_zero()) return {};
  const int da = *a.homogeneous_degree();
  const int db = *b.homogeneous_degree();
  AlgebraElement ab = product(a, b);
  AlgebraElement ba = product(b, a);
  if ((da * db) % 2 != 0) return ab + ba;
  return ab - ba;
}

// ---------------------------------------------------------------------------
// Bases

namespace {

void require_degree(int k) {
  if (k < 0) throw InvalidDegree("negative degree " + std::to_string(k));
  if (k > NormalMonomial::kMaxHeadLength) throw InvalidDegree("degree too large");
}

}  // namespace

std::uint64_t dim_B(int k) {
  require_degree(k);
  return std::uint64_t{1} << k;
}

std::uint64_t dim_A(int k) {
  require_degree(k);
  std::uint64_t total = 0;
  for (Tail t : kTails) {
    int len = k - tail_length(t);
    if (len >= 0) total += std::uint64_t{1} << len;
  }
  return total;
}

std::vector<NormalMonomial> basis_B(int k) {
  require_degree(k);
  std::vector<NormalMonomial> out;
  out.reserve(dim_B(k));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    out.push_back(NormalMonomial::from_bits(k, bits, Tail::Empty));
  }
  return out;
}

std::vector<NormalMonomial> basis_A(int k) {
  require_degree(k);
  std::vector<NormalMonomial> out;
  out.reserve(dim_A(k));
  for (Tail t : kTails) {
    int len = k - tail_length(t);
    if (len < 0) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      out.push_back(NormalMonomial::from_bits(len, bits, t));
    }
  }
  return out;
}

std::size_t index_in_B(const NormalMonomial& m) {
  if (!m.in_B()) throw NotInSubalgebra("monomial " + m.to_string() + " is not in B",
                                       AlgebraElement::monomial(m));
  return static_cast<std::size_t>(m.head_bits());
}

std::size_t index_in_A(const NormalMonomial& m) {
  const int k = m.degree();
  std::size_t offset = 0;
  for (Tail t : kTails) {
    if (t == m.tail()) break;
    int len = k - tail_length(t);
    if (len >= 0) offset += std::size_t{1} << len;
  }
  return offset + static_cast<std::size_t>(m.head_bits());
}

AlgebraElement restrict_to_B(const AlgebraElement& a) {
  AlgebraElement offending;
  for (const auto& [m, c] : a.terms()) {
    if (!m.in_B()) offending.add_term(m, c);
  }
  if (!offending.is_zero()) {
    throw NotInSubalgebra("element has monomials outside B: " + offending.to_string(), offending);
  }
  return a;
}

AlgebraElement total_differential() {
  AlgebraElement d;
  for (Generator g : kGenerators) d += AlgebraElement::generator(g);
  return d;
}

}  // namespace acalg
