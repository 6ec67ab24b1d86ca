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

#include "acalg/alphabet.hpp"

#include "acalg/errors.hpp"

namespace acalg {

std::string_view name(Generator g) {
  switch (g) {
    case Generator::MuBar: return "mubar";
    case Generator::DelBar: return "delbar";
    case Generator::Del: return "del";
    case Generator::Mu: return "mu";
  }
  return "?";
}

std::optional<Generator> generator_from_name(std::string_view text) {
  // Unicode aliases: mu U+03BC, partial U+2202, combining macron U+0304 or
  // combining overline U+0305.
  if (text == "mubar" || text == "\u03bc\u0304" || text == "\u03bc\u0305") return Generator::MuBar;
  if (text == "delbar" || text == "\u2202\u0304" || text == "\u2202\u0305") return Generator::DelBar;
  if (text == "del" || text == "\u2202") return Generator::Del;
  if (text == "mu" || text == "\u03bc") return Generator::Mu;
  return std::nullopt;
}

Bidegree bidegree(std::span<const Generator> word) {
  Bidegree total;
  for (Generator g : word) total = total + bidegree(g);
  return total;
}

std::string word_to_string(std::span<const Generator> word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += name(word[i]);
  }
  return out;
}

int tail_length(Tail t) {
  switch (t) {
    case Tail::Empty: return 0;
    case Tail::MuBar:
    case Tail::Mu: return 1;
    case Tail::MuBarMu: return 2;
  }
  return 0;
}

Word tail_letters(Tail t) {
  switch (t) {
    case Tail::Empty: return {};
    case Tail::MuBar: return {Generator::MuBar};
    case Tail::Mu: return {Generator::Mu};
    case Tail::MuBarMu: return {Generator::MuBar, Generator::Mu};
  }
  return {};
}

NormalMonomial::NormalMonomial(std::span<const Generator> head, Tail tail) : tail_(tail) {
  if (static_cast<int>(head.size()) > kMaxHeadLength) {
    throw InvalidDegree("monomial head longer than " + std::to_string(kMaxHeadLength));
  }
  for (Generator g : head) {
    if (is_mu_type(g)) throw InvalidDegree("normal monomial head may only contain delbar and del");
    bits_ = (bits_ << 1) | (g == Generator::Del ? 1u : 0u);
  }
  head_length_ = static_cast<std::uint8_t>(head.size());
}

NormalMonomial NormalMonomial::from_bits(int head_length, std::uint64_t bits, Tail tail) {
  if (head_length < 0 || head_length > kMaxHeadLength) {
    throw InvalidDegree("monomial head length out of range");
  }
  NormalMonomial m;
  m.head_length_ = static_cast<std::uint8_t>(head_length);
  m.bits_ = head_length == 0 ? 0 : (bits & ((std::uint64_t{1} << head_length) - 1));
  m.tail_ = tail;
  return m;
}

std::optional<NormalMonomial> NormalMonomial::from_word(std::span<const Generator> word) {
  std::size_t split = 0;
  while (split < word.size() && is_del_type(word[split])) ++split;
  auto rest = word.subspan(split);
  Tail tail;
  if (rest.empty()) {
    tail = Tail::Empty;
  } else if (rest.size() == 1) {
    tail = rest[0] == Generator::MuBar ? Tail::MuBar : Tail::Mu;
  } else if (rest.size() == 2 && rest[0] == Generator::MuBar && rest[1] == Generator::Mu) {
    tail = Tail::MuBarMu;
  } else {
    return std::nullopt;
  }
  for (Generator g : rest) {
    if (is_del_type(g)) return std::nullopt;
  }
  return NormalMonomial(word.first(split), tail);
}

Generator NormalMonomial::head_letter(int index) const {
  return ((bits_ >> (head_length_ - 1 - index)) & 1u) ? Generator::Del : Generator::DelBar;
}

Word NormalMonomial::head() const {
  Word w;
  w.reserve(head_length_);
  for (int i = 0; i < head_length_; ++i) w.push_back(head_letter(i));
  return w;
}

Word NormalMonomial::letters() const {
  Word w = head();
  for (Generator g : tail_letters(tail_)) w.push_back(g);
  return w;
}

Bidegree NormalMonomial::bidegree() const { return acalg::bidegree(letters()); }

NormalMonomial NormalMonomial::prepend(Generator g) const {
  if (is_mu_type(g)) throw InvalidDegree("cannot prepend a mu-type letter to a normal head");
  if (head_length_ >= kMaxHeadLength) throw InvalidDegree("monomial head too long");
  NormalMonomial m = *this;
  if (g == Generator::Del) m.bits_ |= std::uint64_t{1} << head_length_;
  ++m.head_length_;
  return m;
}

NormalMonomial NormalMonomial::append_head(std::span<const Generator> suffix) const {
  if (head_length_ + static_cast<int>(suffix.size()) > kMaxHeadLength) {
    throw InvalidDegree("monomial head too long");
  }
  NormalMonomial m = *this;
  for (Generator g : suffix) {
    if (is_mu_type(g)) throw InvalidDegree("normal monomial head may only contain delbar and del");
    m.bits_ = (m.bits_ << 1) | (g == Generator::Del ? 1u : 0u);
    ++m.head_length_;
  }
  return m;
}

NormalMonomial NormalMonomial::with_tail(Tail t) const {
  NormalMonomial m = *this;
  m.tail_ = t;
  return m;
}

NormalMonomial NormalMonomial::drop_first() const {
  if (head_length_ == 0) throw InvalidDegree("empty head");
  return from_bits(head_length_ - 1, bits_, tail_);
}

std::string NormalMonomial::to_string() const { return word_to_string(letters()); }

}  // namespace acalg
