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

#include "commands.h"

#include <fstream>
#include <set>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ringfunc/canonical.h"
#include "ringfunc/dual.h"
#include "ringfunc/funcspace.h"
#include "ringfunc/groups.h"
#include "ringfunc/poly.h"
#include "ringfunc/ring.h"
#include "ringfunc/verify.h"

namespace ringfunc::cli {

namespace {

void Emit(const nlohmann::json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
}

void RequirePrimePower(std::uint64_t p, unsigned n) {
  if (!IsPrime(p)) throw InvalidArgument("--p must be prime, got " + std::to_string(p));
  if (n < 1) throw InvalidArgument("--n must be at least 1");
}

// Smallest k with p^n | k!, by direct factorial arithmetic.
std::uint64_t BetaBruteForce(std::uint64_t p, unsigned n) {
  Integer modulus = 1;
  for (unsigned i = 0; i < n; ++i) modulus *= p;
  Integer factorial = 1;
  for (std::uint64_t k = 1;; ++k) {
    factorial *= k;
    if (factorial % modulus == 0) return k;
  }
}

std::string Csv(const std::vector<Elem>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
  return s;
}

// Quotes a CSV field when it contains a separator.
std::string Field(const std::string& s) {
  return s.find_first_of(",\"") == std::string::npos ? s : '"' + s + '"';
}

}  // namespace

int RunTest(const TestOptions& o, const Limits& limits, std::ostream& out) {
  const Ring ring = Ring::Parse(o.ring, limits);
  const Polynomial f = Polynomial::Parse(o.poly);
  bool result = false, oracle = false;
  if (o.prop == "null") {
    result = IsNull(f, ring, limits);
    oracle = Induce(f, ring, limits).IsZero();
  } else if (o.prop == "unit-valued") {
    result = IsUnitValued(f, ring, limits);
    oracle = Induce(f, ring, limits).IsUnitValued();
  } else if (o.prop == "perm") {
    const auto pp = ring.prime_power();
    if (pp && ring.kind() != RingKind::kDual && (ring.kind() != RingKind::kFiniteField || pp->second == 1)) {
      result = PermCriterionLocal(f, pp->first, pp->second);
    } else {
      result = IsPermBruteForce(f, ring, limits);
    }
    if (o.oracle) oracle = Induce(f, ring, limits).IsBijective();
  } else if (o.prop == "perm-dual") {
    result = PermCriterionDual(f, ring, limits);
    if (o.oracle) oracle = IsPermBruteForce(f, DualRing(ring, limits), limits);
  } else {
    throw InvalidArgument("unknown --prop '" + o.prop + "'");
  }
  nlohmann::json j = {{"result", result}};
  if (o.oracle) j["oracle_agrees"] = oracle == result;
  Emit(j, out);
  return kExitOk;
}

int RunCount(const CountOptions& o, const Limits& limits, std::ostream& out) {
  RequirePrimePower(o.p, o.n);
  nlohmann::json j = {{"what", o.what}, {"p", o.p}, {"n", o.n}};
  Integer value, brute;
  if (o.what == "polyfun") {
    value = CountPolyFun(o.p, o.n);
    if (o.brute_force) brute = CountPolyFunBruteForce(o.p, o.n, limits);
  } else if (o.what == "uvpf") {
    value = CountUvpf(o.p, o.n);
    if (o.brute_force) brute = CountUvpfBruteForce(o.p, o.n, limits);
  } else if (o.what == "kernel") {
    if (o.n < 2) throw InvalidArgument("--what kernel needs --n >= 2");
    value = KernelSize(o.p, o.n);
    if (o.brute_force) {
      const Ring ring = Ring::PrimePower(o.p, o.n);
      std::set<std::vector<Elem>> tables;
      for (const auto& f : EnumerateKernel(o.p, o.n, limits)) tables.insert(Induce(f, ring, limits).values());
      brute = tables.size();
    }
  } else if (o.what == "beta") {
    value = Beta(o.p, o.n);
    if (o.brute_force) brute = BetaBruteForce(o.p, o.n);
  } else {
    throw InvalidArgument("unknown --what '" + o.what + "'");
  }
  j["value"] = IntegerToJson(value);
  if (o.brute_force) {
    j["brute_force"] = IntegerToJson(brute);
    j["agrees"] = brute == value;
  }
  Emit(j, out);
  return kExitOk;
}

int RunCanonical(const CanonicalOptions& o, const Limits& limits, std::ostream& out) {
  RequirePrimePower(o.p, o.n);
  const Polynomial f = Polynomial::Parse(o.poly);
  nlohmann::json j;
  if (o.uv) {
    if (!IsUnitValued(f, Ring::PrimePower(o.p, o.n), limits)) {
      throw InvalidArgument("polynomial is not unit-valued mod " + std::to_string(o.p) + "^" +
                            std::to_string(o.n));
    }
    const UVCanonicalForm form = UvpfCanonicalize(f, o.p, o.n);
    j = ToJson(form);
    j["polynomial"] = form.ToPolynomial().ToString();
  } else {
    const CanonicalForm form = Canonicalize(f, o.p, o.n);
    j = ToJson(form);
    j["polynomial"] = form.ToPolynomial().ToString();
  }
  Emit(j, out);
  return kExitOk;
}

int RunEnumerate(const EnumerateOptions& o, const Limits& limits, std::ostream& out) {
  if (o.format != "json" && o.format != "csv") throw InvalidArgument("unknown --format '" + o.format + "'");
  const bool csv = o.format == "csv";
  std::ostringstream text;
  auto ring_from_flags = [&] {
    if (!o.ring.empty()) return Ring::Parse(o.ring, limits);
    RequirePrimePower(o.p, o.n);
    return Ring::PrimePower(o.p, o.n);
  };
  auto prime_power_from_flags = [&]() -> std::pair<std::uint64_t, unsigned> {
    if (o.ring.empty()) {
      RequirePrimePower(o.p, o.n);
      return {o.p, o.n};
    }
    const Ring ring = Ring::Parse(o.ring, limits);
    const auto pp = ring.prime_power();
    if (!pp || ring.kind() == RingKind::kDual || (ring.kind() == RingKind::kFiniteField && pp->second > 1)) {
      throw InvalidArgument("--what " + o.what + " needs a ring Z_{p^n}");
    }
    return *pp;
  };

  if (o.what == "group") {
    const Ring base = ring_from_flags();
    std::vector<FunctionTable> tables;
    if (o.dual) {
      const auto elements = EnumerateDualPerms(base, limits);
      for (const auto& e : elements) tables.push_back(e.table);
      if (!csv) {
        text << DualPermsToJson(base, elements, o.table).dump(2) << '\n';
      } else if (!o.table) {
        text << "index,witness,g,f\n";
        for (std::size_t i = 0; i < elements.size(); ++i) {
          text << i << ',' << Field(Format(base, elements[i].witness)) << ',' << Csv(elements[i].key.g.values())
               << ',' << Csv(elements[i].key.f.values()) << '\n';
        }
      }
    } else {
      tables = EnumeratePolynomialPermutations(base, limits);
      if (!csv) {
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t i = 0; i < tables.size(); ++i) {
          list.push_back({{"index", i}, {"values", tables[i].values()}});
        }
        nlohmann::json j = {{"ring", base.Descriptor()}, {"order", tables.size()}, {"elements", list}};
        if (o.table) j["table"] = MultiplicationTable(tables);
        text << j.dump(2) << '\n';
      } else if (!o.table) {
        text << "index,values\n";
        for (std::size_t i = 0; i < tables.size(); ++i) text << i << ',' << Csv(tables[i].values()) << '\n';
      }
    }
    if (csv && o.table) text << MultiplicationTableCsv(tables);
  } else if (o.what == "stabilizer") {
    const Ring base = ring_from_flags();
    const auto elements = EnumerateStabilizer(base, limits);
    if (!csv) {
      text << StabilizerToJson(base, elements, o.table).dump(2) << '\n';
    } else if (o.table) {
      std::vector<FunctionTable> tables;
      for (const auto& e : elements) tables.push_back(e.table);
      text << MultiplicationTableCsv(tables);
    } else {
      text << "index,null_part,uvpf\n";
      for (std::size_t i = 0; i < elements.size(); ++i) {
        text << i << ',' << Field(Format(base, elements[i].null_part)) << ','
             << Csv(StabToUvpf(elements[i], base).values()) << '\n';
      }
    }
  } else if (o.what == "uvpf-forms" || o.what == "kernel") {
    if (o.dual) throw InvalidArgument("--dual applies only to --what group");
    const auto [p, n] = prime_power_from_flags();
    std::vector<std::string> polys;
    nlohmann::json list = nlohmann::json::array();
    if (o.what == "uvpf-forms") {
      for (const auto& form : EnumerateUvpfForms(p, n, limits)) {
        polys.push_back(form.ToPolynomial().ToString());
        list.push_back(ToJson(form));
      }
    } else {
      if (n < 2) throw InvalidArgument("--what kernel needs n >= 2");
      for (const auto& f : EnumerateKernel(p, n, limits)) {
        polys.push_back(f.ToString());
        list.push_back(ToJson(f));
      }
    }
    if (csv) {
      text << "index,polynomial\n";
      for (std::size_t i = 0; i < polys.size(); ++i) text << i << ',' << Field(polys[i]) << '\n';
    } else {
      nlohmann::json j = {{"p", p}, {"n", n}, {"count", polys.size()}, {"items", list}, {"polynomials", polys}};
      text << j.dump(2) << '\n';
    }
  } else {
    throw InvalidArgument("unknown --what '" + o.what + "'");
  }

  if (o.out.empty()) {
    out << text.str();
  } else {
    WriteFile(o.out, text.str());
  }
  return kExitOk;
}

int RunVerify(const VerifyOptions& o, const Limits& limits, std::ostream& out) {
  const VerifyReport report = RunVerification(ParseSuite(o.suite), o.max_size, limits);
  out << report.ToText();
  if (!o.out.empty()) WriteFile(o.out, report.ToJson().dump(2) + "\n");
  return report.passed() ? kExitOk : kExitVerify;
}

}  // namespace ringfunc::cli
