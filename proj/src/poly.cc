// Copyright 2026 The ringfunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringfunc/poly.h"

#include <cctype>
#include <limits>
#include <utility>

#include "ringfunc/limits.h"

namespace ringfunc {

Polynomial::Polynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  Normalize();
}

Polynomial::Polynomial(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  Normalize();
}

Polynomial Polynomial::Constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::X() { return Polynomial{0, 1}; }

Polynomial Polynomial::Monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coefficients(degree + 1);
  coefficients[degree] = c;
  return Polynomial(std::move(coefficients));
}

void Polynomial::Normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Integer Polynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Integer(0);
}

Polynomial Polynomial::Derive() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Integer> out(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) out[k - 1] = coefficients_[k] * k;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::Compose(const Polynomial& inner) const {
  Polynomial result;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    result *= inner;
    result += Constant(*it);
  }
  return result;
}

Polynomial Polynomial::Pow(unsigned exponent) const {
  Polynomial result = Constant(1);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Integer Polynomial::Evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  Normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] -= other.coefficients_[k];
  }
  Normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Integer> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(out);
  Normalize();
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Integer> out = a.coefficients_;
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator*(const Integer& c, const Polynomial& a) {
  std::vector<Integer> out = a.coefficients_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::ToString() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coefficients_[k];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (magnitude != 1 || k == 0) out += magnitude.str();
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

// Recursive-descent parser over the grammar
//   expr   := term (('+' | '-') term)*
//   term   := '-' term | '+' term | power (('*' signed) | power)*
//   signed := ('-' | '+')* power
//   power  := atom ('^' digits)?
//   atom   := digits | 'x' | '(' expr ')'
class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial ParseAll() {
    SkipSpace();
    if (AtEnd()) throw ParseError("empty polynomial", pos_);
    Polynomial result = ParseExpr();
    SkipSpace();
    if (!AtEnd()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  static constexpr unsigned kMaxExponent = 1u << 16;

  bool AtEnd() const { return pos_ >= text_.size(); }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char Peek() {
    SkipSpace();
    return AtEnd() ? '\0' : text_[pos_];
  }

  Polynomial ParseExpr() {
    Polynomial acc = ParseTerm();
    for (;;) {
      char c = Peek();
      if (c == '+') {
        ++pos_;
        acc += ParseTerm();
      } else if (c == '-') {
        ++pos_;
        acc -= ParseTerm();
      } else {
        return acc;
      }
    }
  }

  static bool StartsAtom(char c) {
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  // A leading sign covers the whole product, so -x^2 is -(x^2).
  Polynomial ParseTerm() {
    char c = Peek();
    if (c == '-') {
      ++pos_;
      return -ParseTerm();
    }
    if (c == '+') {
      ++pos_;
      return ParseTerm();
    }
    Polynomial acc = ParsePower();
    for (;;) {
      c = Peek();
      if (c == '*') {
        ++pos_;
        acc *= ParseSigned();
      } else if (StartsAtom(c)) {
        acc *= ParsePower();
      } else {
        return acc;
      }
    }
  }

  Polynomial ParseSigned() {
    char c = Peek();
    if (c == '-') {
      ++pos_;
      return -ParseSigned();
    }
    if (c == '+') {
      ++pos_;
      return ParseSigned();
    }
    return ParsePower();
  }

  Polynomial ParsePower() {
    Polynomial base = ParseAtom();
    if (Peek() == '^') {
      ++pos_;
      SkipSpace();
      std::size_t start = pos_;
      if (AtEnd() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected exponent", pos_);
      }
      Integer exponent = ParseDigits();
      if (exponent > kMaxExponent) throw ParseError("exponent too large", start);
      base = base.Pow(static_cast<unsigned>(exponent));
    }
    return base;
  }

  Polynomial ParseAtom() {
    char c = Peek();
    if (c == 'x') {
      ++pos_;
      return Polynomial::X();
    }
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial inner = ParseExpr();
      if (Peek() != ')') throw ParseError("unbalanced '(' opened at " + std::to_string(open), pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::Constant(ParseDigits());
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer ParseDigits() {
    Integer value = 0;
    while (!AtEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::Parse(std::string_view text) { return PolynomialParser(text).ParseAll(); }

nlohmann::json IntegerToJson(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

nlohmann::json ToJson(const Polynomial& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : f.coefficients()) out.push_back(IntegerToJson(c));
  return out;
}

Polynomial PolynomialFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be a coefficient array");
  std::vector<Integer> coefficients;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coefficients.emplace_back(c.get<std::int64_t>());
    } else if (c.is_string()) {
      coefficients.emplace_back(c.get<std::string>());
    } else {
      throw InvalidArgument("polynomial coefficient must be an integer");
    }
  }
  return Polynomial(std::move(coefficients));
}

}  // namespace ringfunc
