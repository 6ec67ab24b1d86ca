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

#include "acalg/scalar.hpp"

#include <cctype>
#include <ostream>

#include "acalg/errors.hpp"

namespace acalg {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw DivisionByZero("division by zero scalar");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result(1);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

namespace {

class ScalarReader {
 public:
  explicit ScalarReader(std::string_view text) : text_(text) {}

  Scalar read() {
    skip_space();
    if (at_end()) fail("empty scalar");
    Scalar total;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar term = read_term();
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  Scalar read_term() {
    if (at_end()) fail("expected number or 'i'");
    if (peek() == 'i') {
      ++pos_;
      return Scalar::i();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number or 'i'");
    mpq_class value(read_digits());
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      std::size_t den_pos = pos_;
      mpz_class den(read_digits());
      if (den == 0) {
        pos_ = den_pos;
        fail("zero denominator");
      }
      value /= mpq_class(den);
    }
    skip_space();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'i') fail("expected 'i' after '*'");
      ++pos_;
      return Scalar(0, value);
    }
    if (!at_end() && peek() == 'i') {
      ++pos_;
      return Scalar(0, value);
    }
    return Scalar(value);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("invalid scalar '" + std::string(text_) + "': " + what, 1,
                      static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarReader(text).read(); }

std::string Scalar::to_string() const {
  if (is_real()) return rational_text(re_);
  std::string imag;
  mpq_class mag = abs(im_);
  imag = mag == 1 ? "i" : rational_text(mag) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rational_text(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace acalg
