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

#include "ringfunc/ring.h"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ringfunc {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;
constexpr std::uint64_t kFieldTableLimit = 256;

std::uint64_t ModMul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::optional<std::pair<std::uint64_t, unsigned>> FactorPrimePower(std::uint64_t m) {
  if (m < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return std::make_pair(m, 1u);
  unsigned n = 0;
  while (m % p == 0) {
    m /= p;
    ++n;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, n);
}

std::uint64_t ParseUnsigned(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InvalidArgument("ring descriptor: invalid " + std::string(what) + " '" +
                          std::string(text) + "'");
  }
  return value;
}

// Digits of a field element, c_0 first.
std::vector<std::uint64_t> Digits(std::uint64_t value, std::uint64_t p, unsigned m) {
  std::vector<std::uint64_t> digits(m);
  for (unsigned i = 0; i < m; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  return digits;
}

std::uint64_t Undigits(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
  std::uint64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) value = value * p + *it;
  return value;
}

// Remainder of `a` by a monic `modulus` over F_p; both low-to-high.
std::vector<std::uint64_t> ReduceMonic(std::vector<std::uint64_t> a,
                                       const std::vector<std::uint64_t>& modulus,
                                       std::uint64_t p) {
  const std::size_t m = modulus.size() - 1;
  for (std::size_t k = a.size(); k-- > m;) {
    std::uint64_t c = a[k] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) {
      a[k - m + i] = (a[k - m + i] + (p - c) * modulus[i]) % p;
    }
  }
  a.resize(m);
  for (auto& d : a) d %= p;
  return a;
}

std::vector<std::uint64_t> ResiduesModP(const Polynomial& f, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  out.reserve(f.coefficients().size());
  Integer pp = p;
  for (const auto& c : f.coefficients()) {
    Integer r = c % pp;
    if (r < 0) r += pp;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

// True if `divisor` (monic, degree >= 1) divides `f` over F_p.
bool DividesModP(const std::vector<std::uint64_t>& divisor, std::vector<std::uint64_t> f,
                 std::uint64_t p) {
  auto rest = ReduceMonic(std::move(f), divisor, p);
  return std::all_of(rest.begin(), rest.end(), [](std::uint64_t d) { return d == 0; });
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool IsIrreducibleModP(const Polynomial& f, std::uint64_t p) {
  auto coeffs = ResiduesModP(f, p);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) return false;
  const unsigned degree = static_cast<unsigned>(coeffs.size() - 1);
  if (degree == 1) return true;
  // Make monic.
  std::uint64_t lead = coeffs.back();
  std::uint64_t lead_inv = 1;
  for (std::uint64_t e = p - 2, b = lead; e; e >>= 1, b = b * b % p) {
    if (e & 1) lead_inv = lead_inv * b % p;
  }
  for (auto& c : coeffs) c = c * lead_inv % p;
  // Any reducible polynomial has a monic factor of degree <= degree/2.
  for (unsigned d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      auto divisor = Digits(low, p, d);
      divisor.push_back(1);
      if (DividesModP(divisor, coeffs, p)) return false;
    }
  }
  return true;
}

Polynomial FindIrreducible(std::uint64_t p, unsigned degree) {
  if (!IsPrime(p)) throw InvalidArgument("FindIrreducible: " + std::to_string(p) + " is not prime");
  if (degree == 0) throw InvalidArgument("FindIrreducible: degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (count > kMaxModulus / p) throw InvalidArgument("FindIrreducible: field too large");
    count *= p;
  }
  // Candidate index k encodes (c_0, ..., c_{m-1}) with c_0 most significant.
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Integer> coeffs(degree + 1);
    std::uint64_t rest = k;
    for (unsigned i = degree; i-- > 0;) {
      coeffs[i] = rest % p;
      rest /= p;
    }
    coeffs[degree] = 1;
    Polynomial candidate(std::move(coeffs));
    if (IsIrreducibleModP(candidate, p)) return candidate;
  }
  throw Error("FindIrreducible: no irreducible polynomial found");
}

struct Ring::Impl {
  RingKind kind = RingKind::kModular;
  std::uint64_t size = 0;
  std::uint64_t p = 0;   // prime (prime power, field), or 0 for composite Z_m
  unsigned n = 0;        // exponent (prime power) or extension degree (field)
  std::string descriptor;

  // Fields.
  Polynomial modulus_poly;
  std::vector<std::uint64_t> modulus;
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;

  // Dual.
  std::optional<Ring> base;

  bool is_field() const {
    switch (kind) {
      case RingKind::kFiniteField:
        return true;
      case RingKind::kModular:
      case RingKind::kPrimePower:
        return p != 0 && n == 1;
      case RingKind::kDual:
        return false;
    }
    return false;
  }

  Elem FieldAddSlow(Elem a, Elem b) const {
    auto da = Digits(a, p, n);
    auto db = Digits(b, p, n);
    for (unsigned i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
    return static_cast<Elem>(Undigits(da, p));
  }

  Elem FieldMulSlow(Elem a, Elem b) const {
    auto da = Digits(a, p, n);
    auto db = Digits(b, p, n);
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    return static_cast<Elem>(Undigits(ReduceMonic(std::move(prod), modulus, p), p));
  }
};

Ring Ring::Modular(std::uint64_t m) {
  if (m < 2) throw InvalidArgument("Z_m requires m >= 2, got " + std::to_string(m));
  if (m > kMaxModulus) throw InvalidArgument("Z_m modulus too large: " + std::to_string(m));
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::kModular;
  impl->size = m;
  if (auto pp = FactorPrimePower(m)) {
    impl->p = pp->first;
    impl->n = pp->second;
  }
  impl->descriptor = "zm:" + std::to_string(m);
  return Ring(std::move(impl));
}

Ring Ring::PrimePower(std::uint64_t p, unsigned n) {
  if (!IsPrime(p)) throw InvalidArgument("zpn: " + std::to_string(p) + " is not prime");
  if (n < 1) throw InvalidArgument("zpn: exponent must be >= 1");
  std::uint64_t m = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (m > kMaxModulus / p) throw InvalidArgument("zpn: modulus too large");
    m *= p;
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::kPrimePower;
  impl->size = m;
  impl->p = p;
  impl->n = n;
  impl->descriptor = "zpn:" + std::to_string(p) + "," + std::to_string(n);
  return Ring(std::move(impl));
}

Ring Ring::FiniteField(std::uint64_t p, unsigned degree) {
  if (!IsPrime(p)) throw InvalidArgument("fq: " + std::to_string(p) + " is not prime");
  if (degree < 1) throw InvalidArgument("fq: degree must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::kFiniteField;
  impl->p = p;
  impl->n = degree;
  impl->modulus_poly = FindIrreducible(p, degree);
  impl->modulus = ResiduesModP(impl->modulus_poly, p);
  impl->size = 1;
  for (unsigned i = 0; i < degree; ++i) impl->size *= p;
  impl->descriptor = "fq:" + std::to_string(p);
  if (degree > 1) impl->descriptor += "," + std::to_string(degree);
  if (degree > 1 && impl->size <= kFieldTableLimit) {
    const auto q = impl->size;
    impl->add_table.resize(q * q);
    impl->mul_table.resize(q * q);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        impl->add_table[a * q + b] = impl->FieldAddSlow(a, b);
        impl->mul_table[a * q + b] = impl->FieldMulSlow(a, b);
      }
    }
  }
  return Ring(std::move(impl));
}

Ring Ring::Dual(const Ring& base, const Limits& limits) {
  if (base.is_dual()) throw InvalidArgument("nested dual rings are not supported");
  const std::uint64_t size = base.size() * base.size();
  limits.RequireRingSize(size, "dual(" + base.Descriptor() + ")");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::kDual;
  impl->size = size;
  impl->p = base.impl_->p;
  impl->n = base.impl_->n;
  impl->base = base;
  impl->descriptor = "dual:" + base.Descriptor();
  return Ring(std::move(impl));
}

Ring Ring::Parse(std::string_view descriptor, const Limits& limits) {
  auto colon = descriptor.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("ring descriptor '" + std::string(descriptor) + "' lacks a ':'");
  }
  std::string_view tag = descriptor.substr(0, colon);
  std::string_view rest = descriptor.substr(colon + 1);
  if (tag == "dual") return Dual(Parse(rest, limits), limits);
  auto comma = rest.find(',');
  std::string_view first = rest.substr(0, comma);
  std::optional<std::string_view> second;
  if (comma != std::string_view::npos) second = rest.substr(comma + 1);
  if (tag == "zm") {
    if (second) throw InvalidArgument("zm takes a single modulus");
    return Modular(ParseUnsigned(first, "modulus"));
  }
  if (tag == "zpn") {
    if (!second) throw InvalidArgument("zpn requires <p>,<n>");
    return PrimePower(ParseUnsigned(first, "prime"),
                      static_cast<unsigned>(ParseUnsigned(*second, "exponent")));
  }
  if (tag == "fq") {
    unsigned degree = second ? static_cast<unsigned>(ParseUnsigned(*second, "degree")) : 1;
    return FiniteField(ParseUnsigned(first, "prime"), degree);
  }
  throw InvalidArgument("unknown ring kind '" + std::string(tag) + "'");
}

RingKind Ring::kind() const { return impl_->kind; }
std::string Ring::Descriptor() const { return impl_->descriptor; }
std::uint64_t Ring::size() const { return impl_->size; }

std::uint64_t Ring::characteristic() const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower:
      return impl_->size;
    case RingKind::kFiniteField:
      return impl_->p;
    case RingKind::kDual:
      return impl_->base->characteristic();
  }
  return 0;
}

bool Ring::is_field() const { return impl_->is_field(); }

std::optional<std::pair<std::uint64_t, unsigned>> Ring::prime_power() const {
  if (impl_->kind == RingKind::kDual || impl_->p == 0) return std::nullopt;
  if (impl_->kind == RingKind::kFiniteField) {
    if (impl_->n != 1) return std::nullopt;
    return std::make_pair(impl_->p, 1u);
  }
  return std::make_pair(impl_->p, impl_->n);
}

const Ring& Ring::base() const {
  if (!impl_->base) throw InvalidArgument(impl_->descriptor + " is not a dual ring");
  return *impl_->base;
}

const Polynomial& Ring::field_modulus() const {
  if (impl_->kind != RingKind::kFiniteField) {
    throw InvalidArgument(impl_->descriptor + " is not a finite field");
  }
  return impl_->modulus_poly;
}

Elem Ring::Add(Elem a, Elem b) const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower: {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Elem>(s >= impl_->size ? s - impl_->size : s);
    }
    case RingKind::kFiniteField:
      if (impl_->n == 1) {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Elem>(s >= impl_->p ? s - impl_->p : s);
      }
      if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->size + b];
      return impl_->FieldAddSlow(a, b);
    case RingKind::kDual: {
      const Ring& r = *impl_->base;
      return MakeDual(r.Add(RealPart(a), RealPart(b)), r.Add(EpsPart(a), EpsPart(b)));
    }
  }
  return 0;
}

Elem Ring::Neg(Elem a) const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower:
      return a == 0 ? 0 : static_cast<Elem>(impl_->size - a);
    case RingKind::kFiniteField: {
      if (impl_->n == 1) return a == 0 ? 0 : static_cast<Elem>(impl_->p - a);
      auto digits = Digits(a, impl_->p, impl_->n);
      for (auto& d : digits) d = d == 0 ? 0 : impl_->p - d;
      return static_cast<Elem>(Undigits(digits, impl_->p));
    }
    case RingKind::kDual: {
      const Ring& r = *impl_->base;
      return MakeDual(r.Neg(RealPart(a)), r.Neg(EpsPart(a)));
    }
  }
  return 0;
}

Elem Ring::Sub(Elem a, Elem b) const { return Add(a, Neg(b)); }

Elem Ring::Mul(Elem a, Elem b) const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower:
      return static_cast<Elem>(ModMul(a, b, impl_->size));
    case RingKind::kFiniteField:
      if (impl_->n == 1) return static_cast<Elem>(ModMul(a, b, impl_->p));
      if (!impl_->mul_table.empty()) return impl_->mul_table[a * impl_->size + b];
      return impl_->FieldMulSlow(a, b);
    case RingKind::kDual: {
      // (a + b al)(c + d al) = ac + (ad + bc) al
      const Ring& r = *impl_->base;
      Elem ra = RealPart(a), ea = EpsPart(a), rb = RealPart(b), eb = EpsPart(b);
      return MakeDual(r.Mul(ra, rb), r.Add(r.Mul(ra, eb), r.Mul(ea, rb)));
    }
  }
  return 0;
}

Elem Ring::Pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e) {
    if (e & 1) result = Mul(result, a);
    e >>= 1;
    if (e) a = Mul(a, a);
  }
  return result;
}

Elem Ring::FromInteger(const Integer& value) const {
  if (impl_->kind == RingKind::kDual) return MakeDual(impl_->base->FromInteger(value), 0);
  const Integer modulus = impl_->kind == RingKind::kFiniteField ? impl_->p : impl_->size;
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<Elem>(r);
}

Elem Ring::FromInt(std::int64_t value) const { return FromInteger(Integer(value)); }

bool Ring::IsUnit(Elem a) const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower:
      return std::gcd(std::uint64_t{a}, impl_->size) == 1;
    case RingKind::kFiniteField:
      return a != 0;
    case RingKind::kDual:
      return impl_->base->IsUnit(RealPart(a));
  }
  return false;
}

std::optional<Elem> Ring::Inverse(Elem a) const {
  if (!IsUnit(a)) return std::nullopt;
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower: {
      // Extended Euclid on (a, m).
      std::int64_t old_r = a, r = static_cast<std::int64_t>(impl_->size);
      std::int64_t old_s = 1, s = 0;
      while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
      }
      std::int64_t m = static_cast<std::int64_t>(impl_->size);
      return static_cast<Elem>(((old_s % m) + m) % m);
    }
    case RingKind::kFiniteField:
      return Pow(a, impl_->size - 2);
    case RingKind::kDual: {
      // (a + b al)^{-1} = a^{-1} - b a^{-2} al
      const Ring& r = *impl_->base;
      Elem inv = *r.Inverse(RealPart(a));
      return MakeDual(inv, r.Neg(r.Mul(EpsPart(a), r.Mul(inv, inv))));
    }
  }
  return std::nullopt;
}

std::vector<Elem> Ring::Elements(const Limits& limits) const {
  limits.RequireRingSize(size(), "enumerating " + Descriptor());
  std::vector<Elem> out(size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

std::vector<Elem> Ring::Units(const Limits& limits) const {
  std::vector<Elem> out;
  for (Elem e : Elements(limits)) {
    if (IsUnit(e)) out.push_back(e);
  }
  return out;
}

Elem Ring::MakeDual(Elem real, Elem eps) const {
  return static_cast<Elem>(real + std::uint64_t{eps} * impl_->base->size());
}

Elem Ring::RealPart(Elem e) const { return static_cast<Elem>(e % impl_->base->size()); }

Elem Ring::EpsPart(Elem e) const { return static_cast<Elem>(e / impl_->base->size()); }

std::string Ring::Format(Elem a) const {
  switch (impl_->kind) {
    case RingKind::kModular:
    case RingKind::kPrimePower:
      return std::to_string(a);
    case RingKind::kFiniteField: {
      if (impl_->n == 1) return std::to_string(a);
      auto digits = Digits(a, impl_->p, impl_->n);
      std::string out;
      for (unsigned k = impl_->n; k-- > 0;) {
        if (digits[k] == 0) continue;
        if (!out.empty()) out += '+';
        if (digits[k] != 1 || k == 0) out += std::to_string(digits[k]);
        if (k >= 1) out += 't';
        if (k >= 2) out += '^' + std::to_string(k);
      }
      return out.empty() ? "0" : out;
    }
    case RingKind::kDual: {
      const Ring& r = *impl_->base;
      auto wrap = [](std::string s) {
        return s.find('+') == std::string::npos ? s : "(" + s + ")";
      };
      return wrap(r.Format(RealPart(a))) + "+" + wrap(r.Format(EpsPart(a))) + "*al";
    }
  }
  return {};
}

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view StripParens(std::string_view s) {
  s = Trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return Trim(s.substr(1, s.size() - 2));
  return s;
}

}  // namespace

Elem Ring::ParseElement(std::string_view text) const {
  text = Trim(text);
  if (text.empty()) throw ParseError("empty ring element", 0);
  if (impl_->kind == RingKind::kDual) {
    const Ring& r = *impl_->base;
    if (text.size() < 2 || text.substr(text.size() - 2) != "al") {
      return MakeDual(r.ParseElement(StripParens(text)), 0);
    }
    std::string_view head = Trim(text.substr(0, text.size() - 2));
    const bool starred = !head.empty() && head.back() == '*';
    if (starred) head = Trim(head.substr(0, head.size() - 1));
    // Split "a+b" at the last top-level '+'.
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (head[i] == '(') ++depth;
      if (head[i] == ')') --depth;
      if (head[i] == '+' && depth == 0) split = i;
    }
    std::string_view real_text = split == std::string_view::npos ? "" : head.substr(0, split);
    std::string_view eps_text = split == std::string_view::npos ? head : head.substr(split + 1);
    if (starred && Trim(eps_text).empty()) throw ParseError("missing coefficient before '*al'", head.size());
    Elem real = real_text.empty() ? 0 : r.ParseElement(StripParens(real_text));
    // A bare "al" has coefficient one.
    Elem eps = Trim(eps_text).empty() ? 1 : r.ParseElement(StripParens(eps_text));
    return MakeDual(real, eps);
  }
  if (impl_->kind == RingKind::kFiniteField && impl_->n > 1) {
    std::string rewritten(text);
    std::replace(rewritten.begin(), rewritten.end(), 't', 'x');
    auto residues = ResiduesModP(Polynomial::Parse(rewritten), impl_->p);
    if (residues.size() < impl_->n + 1) residues.resize(impl_->n + 1, 0);
    return static_cast<Elem>(Undigits(ReduceMonic(residues, impl_->modulus, impl_->p), impl_->p));
  }
  Polynomial constant = Polynomial::Parse(text);
  if (constant.degree() > 0) {
    throw ParseError("expected an element of " + Descriptor() + ", got '" + std::string(text) + "'", 0);
  }
  return FromInteger(constant.coefficient(0));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.is_dual() != b.is_dual()) return false;
  if (a.is_dual()) return a.base() == b.base();
  auto ka = a.kind() == RingKind::kFiniteField && a.impl_->n > 1;
  auto kb = b.kind() == RingKind::kFiniteField && b.impl_->n > 1;
  if (ka || kb) return ka && kb && a.size() == b.size() && a.impl_->modulus == b.impl_->modulus;
  return a.size() == b.size();
}

}  // namespace ringfunc
