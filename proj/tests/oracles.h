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

// Brute-force reference implementations used only by the tests. They avoid
// the library's arithmetic entirely and work on plain integers.

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace ringfunc::testing {

using Coeffs = std::vector<std::int64_t>;  // lowest degree first

inline std::int64_t Mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

inline std::int64_t EvalMod(const Coeffs& f, std::int64_t x, std::int64_t m) {
  std::int64_t acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = Mod(acc * x + f[k], m);
  return acc;
}

inline std::vector<std::int64_t> TableMod(const Coeffs& f, std::int64_t m) {
  std::vector<std::int64_t> t(m);
  for (std::int64_t x = 0; x < m; ++x) t[x] = EvalMod(f, x, m);
  return t;
}

inline std::int64_t Gcd(std::int64_t a, std::int64_t b) { return b == 0 ? a : Gcd(b, a % b); }

inline bool IsPermMod(const Coeffs& f, std::int64_t m) {
  const auto t = TableMod(f, m);
  return std::set<std::int64_t>(t.begin(), t.end()).size() == static_cast<std::size_t>(m);
}

inline bool IsUnitValuedMod(const Coeffs& f, std::int64_t m) {
  for (auto v : TableMod(f, m)) {
    if (Gcd(v, m) != 1) return false;
  }
  return true;
}

// Dual numbers over Z_m as explicit pairs.
struct DualPair {
  std::int64_t a, b;
};

inline DualPair EvalDualMod(const Coeffs& f, DualPair x, std::int64_t m) {
  DualPair acc{0, 0};
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = {Mod(acc.a * x.a + f[k], m), Mod(acc.a * x.b + acc.b * x.a, m)};
  }
  return acc;
}

inline bool IsDualPermMod(const Coeffs& f, std::int64_t m) {
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      const DualPair v = EvalDualMod(f, {a, b}, m);
      seen.insert({v.a, v.b});
    }
  }
  return seen.size() == static_cast<std::size_t>(m * m);
}

// x(x-1)...(x-j+1) at an integer point, exactly.
inline std::int64_t FallingFactorialAt(std::int64_t x, std::uint64_t j) {
  std::int64_t acc = 1;
  for (std::uint64_t k = 0; k < j; ++k) acc *= x - static_cast<std::int64_t>(k);
  return acc;
}

// Smallest k with p^n | k!.
inline std::uint64_t BetaOracle(std::uint64_t p, unsigned n) {
  std::uint64_t need = n, have = 0;
  for (std::uint64_t k = 1;; ++k) {
    for (std::uint64_t v = k; v % p == 0; v /= p) ++have;
    if (have >= need) return k;
  }
}

inline Coeffs RandomCoeffs(std::mt19937_64& rng, std::int64_t m, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(0, m - 1);
  Coeffs c(degree(rng) + 1);
  for (auto& v : c) v = coeff(rng);
  return c;
}

// Number of distinct tables mod m of polynomials with `length` coefficients.
inline std::size_t DistinctTablesMod(std::int64_t m, unsigned length, bool unit_valued_only) {
  std::set<std::vector<std::int64_t>> tables;
  Coeffs c(length, 0);
  while (true) {
    if (!unit_valued_only || IsUnitValuedMod(c, m)) tables.insert(TableMod(c, m));
    unsigned k = 0;
    while (k < length && ++c[k] == m) c[k++] = 0;
    if (k == length) break;
  }
  return tables.size();
}

}  // namespace ringfunc::testing
