#include "eoa/finite_field.hpp"

#include <algorithm>
#include <string>

#include "eoa/error.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_mod(Poly a, const Poly& divisor, int p) {
  trim(a);
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd && !a.empty()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = ((a[shift + i] - lead * divisor[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_index(int index, int p, int len) {
  Poly out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return out;
}

int index_from_poly(const Poly& a, int p) {
  int index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p + a[i];
  return index;
}

int int_pow(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

Poly default_modulus(int p, int m) {
  if (p == 2 && m == 2) return {1, 1, 1};
  if (p == 3 && m == 2) return {1, 0, 1};
  if (m == 1) return {0, 1};
  const int count = int_pow(p, m);
  for (int low = 0; low < count; ++low) {
    Poly candidate = poly_from_index(low, p, m);
    candidate.push_back(1);
    if (is_irreducible(p, candidate)) return candidate;
  }
  throw Error("no irreducible polynomial found for GF(" + std::to_string(p) + "^" +
              std::to_string(m) + ")");
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t f = 2; f * f <= value; ++f)
    if (value % f == 0) return false;
  return true;
}

std::pair<int, int> prime_power_decompose(std::uint64_t q) {
  if (q < 2) throw Error("field order must be at least 2, got " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw Error(std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), m};
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2 || a.back() != 1) return false;
  const int m = static_cast<int>(a.size()) - 1;
  for (int deg = 1; deg < m; ++deg) {
    const int count = int_pow(p, deg);
    for (int low = 0; low < count; ++low) {
      Poly divisor = poly_from_index(low, p, deg);
      divisor.push_back(1);
      if (poly_mod(a, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldTable FieldTable::create(int p, int m) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw Error("extension degree must be >= 1, got " + std::to_string(m));
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kCaps.field_order)
      throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(m) +
                        " exceeds cap " + std::to_string(kCaps.field_order));
  }

  auto t = std::make_shared<Tables>();
  t->spec = FieldSpec{p, m, default_modulus(p, m)};
  t->q = static_cast<int>(q);
  const auto qs = static_cast<std::size_t>(q);
  t->add.resize(qs * qs);
  t->mul.resize(qs * qs);
  t->neg.resize(qs);
  t->inv.assign(qs, 0);

  for (int a = 0; a < t->q; ++a) {
    const Poly pa = poly_from_index(a, p, m);
    Poly na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p - pa[i]) % p;
    t->neg[static_cast<std::size_t>(a)] = static_cast<Symbol>(index_from_poly(na, p));
    for (int b = 0; b < t->q; ++b) {
      const Poly pb = poly_from_index(b, p, m);
      Poly sum(pa.size());
      for (std::size_t i = 0; i < pa.size(); ++i) sum[i] = (pa[i] + pb[i]) % p;
      Poly prod(pa.size() + pb.size() - 1, 0);
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
          prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      prod = poly_mod(prod, t->spec.modulus, p);
      prod.resize(static_cast<std::size_t>(m), 0);
      const std::size_t at = static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b);
      t->add[at] = static_cast<Symbol>(index_from_poly(sum, p));
      t->mul[at] = static_cast<Symbol>(index_from_poly(prod, p));
    }
  }
  for (int a = 1; a < t->q; ++a)
    for (int b = 1; b < t->q; ++b)
      if (t->mul[static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b)] == 1)
        t->inv[static_cast<std::size_t>(a)] = static_cast<Symbol>(b);

  return FieldTable(std::move(t));
}

FieldTable FieldTable::create_order(std::uint64_t q) {
  if (q > kCaps.field_order)
    throw CapExceeded("field order " + std::to_string(q) + " exceeds cap " +
                      std::to_string(kCaps.field_order));
  const auto [p, m] = prime_power_decompose(q);
  return create(p, m);
}

Symbol FieldTable::inv(Symbol a) const {
  if (a == 0) throw Error("inverse of zero in GF(" + std::to_string(order()) + ")");
  return tables_->inv[a];
}

int FieldTable::coord_dim() const {
  if (!has_coords())
    throw Error("GF(" + std::to_string(order()) +
                ") has no Z_d x Z_d labeling: order must be d^2 with d prime");
  return characteristic();
}

FieldCoords FieldTable::coords(Symbol elem) const {
  const int d = coord_dim();
  return {elem % d, elem / d};
}

Symbol FieldTable::from_coords(FieldCoords c) const {
  const int d = coord_dim();
  return static_cast<Symbol>(((c.a % d) + d) % d + d * (((c.b % d) + d) % d));
}

}  // namespace eoa
