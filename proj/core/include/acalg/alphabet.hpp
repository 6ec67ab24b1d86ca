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

// The four-letter operator alphabet, words over it, and normal monomials.

#ifndef ACALG_ALPHABET_HPP
#define ACALG_ALPHABET_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acalg {

/// Declaration order is the canonical basis order of degree 1.
enum class Generator : std::uint8_t { MuBar = 0, DelBar = 1, Del = 2, Mu = 3 };

inline constexpr std::array<Generator, 4> kGenerators = {Generator::MuBar, Generator::DelBar,
                                                         Generator::Del, Generator::Mu};

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  Bidegree operator+(Bidegree o) const { return {p + o.p, q + o.q}; }
  Bidegree operator-(Bidegree o) const { return {p - o.p, q - o.q}; }
  auto operator<=>(const Bidegree&) const = default;
};

constexpr Bidegree bidegree(Generator g) {
  switch (g) {
    case Generator::MuBar: return {-1, 2};
    case Generator::DelBar: return {0, 1};
    case Generator::Del: return {1, 0};
    case Generator::Mu: return {2, -1};
  }
  return {};
}

constexpr bool is_mu_type(Generator g) { return g == Generator::MuBar || g == Generator::Mu; }
constexpr bool is_del_type(Generator g) { return !is_mu_type(g); }

/// ASCII name: "mubar", "delbar", "del", "mu".
std::string_view name(Generator g);
/// Accepts the ASCII names and the Unicode aliases (μ̄, ∂̄, ∂, μ; the bar may
/// be U+0304 or U+0305).
std::optional<Generator> generator_from_name(std::string_view text);

using Word = std::vector<Generator>;

Bidegree bidegree(std::span<const Generator> word);
/// "del.mubar"; the empty word renders as "1".
std::string word_to_string(std::span<const Generator> word);

/// Right-hand factor of a normal monomial.
enum class Tail : std::uint8_t { Empty = 0, MuBar = 1, Mu = 2, MuBarMu = 3 };

inline constexpr std::array<Tail, 4> kTails = {Tail::Empty, Tail::MuBar, Tail::Mu, Tail::MuBarMu};

int tail_length(Tail t);
Word tail_letters(Tail t);

/// A basis monomial of A: a head word over {delbar, del} followed by one of
/// the tails 1, mubar, mu, mubar.mu.
///
/// The head is packed into a bit string (delbar = 0, del = 1, first letter in
/// the most significant position), so the head index inside B_k is just the
/// packed value. Ordering is by total degree, then tail, then head
/// lexicographically with delbar < del.
class NormalMonomial {
 public:
  static constexpr int kMaxHeadLength = 62;

  NormalMonomial() = default;
  /// Throws InvalidDegree if a letter is not delbar/del or the head is too long.
  NormalMonomial(std::span<const Generator> head, Tail tail);
  static NormalMonomial from_bits(int head_length, std::uint64_t bits, Tail tail);
  static NormalMonomial unit() { return {}; }
  /// Returns nullopt when the word is not already normal.
  static std::optional<NormalMonomial> from_word(std::span<const Generator> word);

  int head_length() const { return head_length_; }
  std::uint64_t head_bits() const { return bits_; }
  Tail tail() const { return tail_; }
  int degree() const { return head_length_ + tail_length(tail_); }
  Generator head_letter(int index) const;
  Word head() const;
  Word letters() const;
  Bidegree bidegree() const;
  bool in_B() const { return tail_ == Tail::Empty; }

  NormalMonomial prepend(Generator g) const;
  /// Appends a word over {delbar, del} to the head.
  NormalMonomial append_head(std::span<const Generator> suffix) const;
  NormalMonomial with_tail(Tail t) const;
  /// Drops the first head letter.
  NormalMonomial drop_first() const;

  std::string to_string() const;

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
  friend std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.tail_ <=> b.tail_; c != 0) return c;
    if (auto c = a.head_length_ <=> b.head_length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t head_length_ = 0;
  Tail tail_ = Tail::Empty;
};

}  // namespace acalg

#endif  // ACALG_ALPHABET_HPP
