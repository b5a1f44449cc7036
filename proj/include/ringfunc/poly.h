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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace ringfunc {

using Integer = boost::multiprecision::cpp_int;

// Dense univariate polynomial with integer coefficients, lowest degree first.
//
// Coefficients are never reduced here. The same polynomial is interpreted
// in Z_m, F_p or a dual ring only when it is evaluated or induced there, so
// one value can be read mod p, p^{n-1} and p^n side by side.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long long> coefficients);

  static Polynomial Constant(const Integer& c);
  static Polynomial X();
  static Polynomial Monomial(const Integer& c, std::size_t degree);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  Integer coefficient(std::size_t k) const;

  Polynomial Derive() const;
  // this(inner(x)).
  Polynomial Compose(const Polynomial& inner) const;
  Polynomial Pow(unsigned exponent) const;
  Integer Evaluate(const Integer& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Integer& c, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Descending-degree text such as "2x^3+2x" or "-x^2+1"; "0" for zero.
  std::string ToString() const;

  // Accepts integers, x, + - * ^ and parentheses, ignoring whitespace.
  // Juxtaposition multiplies ("2x", "3(x+1)"). Throws ParseError.
  static Polynomial Parse(std::string_view text);

 private:
  void Normalize();

  std::vector<Integer> coefficients_;
};

// Dense coefficient array, lowest degree first. Coefficients that do not
// fit in 64 bits are written as decimal strings.
nlohmann::json ToJson(const Polynomial& f);
Polynomial PolynomialFromJson(const nlohmann::json& j);

nlohmann::json IntegerToJson(const Integer& value);

}  // namespace ringfunc
