#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "eoa/symbol_matrix.hpp"

namespace eoa {

// Parameters of GF(p^m). The modulus is monic, irreducible over GF(p), and
// stored as coefficients in ascending order (size m + 1, last entry 1).
struct FieldSpec {
  int p = 0;
  int m = 0;
  std::vector<int> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Coordinates of a GF(d^2) element in the basis {1, xi}, xi = element p.
struct FieldCoords {
  int a = 0;
  int b = 0;

  friend bool operator==(const FieldCoords&, const FieldCoords&) = default;
};

bool is_prime(std::uint64_t value);

// Returns (p, m) with q = p^m, or throws if q is not a prime power.
std::pair<int, int> prime_power_decompose(std::uint64_t q);

// Full arithmetic tables for GF(p^m). Immutable; copies share the tables.
class FieldTable {
 public:
  // Builds GF(p^m) with the fixed modulus for that field: x^2+x+1 for GF(4),
  // x^2+1 for GF(9), otherwise the smallest irreducible monic polynomial when
  // the lower coefficients are read as a base-p number (c0 least significant).
  static FieldTable create(int p, int m);
  static FieldTable create_order(std::uint64_t q);

  const FieldSpec& spec() const { return tables_->spec; }
  int characteristic() const { return tables_->spec.p; }
  int degree() const { return tables_->spec.m; }
  int order() const { return tables_->q; }

  Symbol add(Symbol a, Symbol b) const { return tables_->add[index(a, b)]; }
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
  Symbol mul(Symbol a, Symbol b) const { return tables_->mul[index(a, b)]; }
  Symbol neg(Symbol a) const { return tables_->neg[a]; }
  // Throws Error for a == 0.
  Symbol inv(Symbol a) const;

  bool contains(int value) const { return value >= 0 && value < order(); }

  // Whether coords() is defined: q = d^2 with d prime, i.e. m == 2.
  bool has_coords() const { return degree() == 2; }
  // d for q = d^2.
  int coord_dim() const;
  // Additive isomorphism GF(d^2) -> Z_d x Z_d. Throws unless has_coords().
  FieldCoords coords(Symbol elem) const;
  Symbol from_coords(FieldCoords c) const;

  friend bool operator==(const FieldTable& a, const FieldTable& b) {
    return a.tables_ == b.tables_ || a.spec() == b.spec();
  }

 private:
  struct Tables {
    FieldSpec spec;
    int q = 0;
    std::vector<Symbol> add, mul, neg, inv;
  };

  explicit FieldTable(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
  std::size_t index(Symbol a, Symbol b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(tables_->q) + b;
  }

  std::shared_ptr<const Tables> tables_;
};

// Monic irreducibility by trial division with every monic polynomial of
// degree 1..m-1. Coefficients ascending.
bool is_irreducible(int p, const std::vector<int>& poly);

}  // namespace eoa
