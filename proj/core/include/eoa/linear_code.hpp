#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eoa/finite_field.hpp"
#include "eoa/symbol_matrix.hpp"

namespace eoa {

// An [n, k]_q linear code held by its n x k generator matrix G, so that the
// codewords are the columns c = G m for messages m in F_q^k.
class LinearCode {
 public:
  // Throws Error unless 1 <= k <= n, every entry is a field symbol, and G has
  // rank k.
  LinearCode(FieldTable field, SymbolMatrix generator);

  const FieldTable& field() const { return field_; }
  const SymbolMatrix& generator() const { return generator_; }
  std::size_t length() const { return generator_.rows(); }
  std::size_t dimension() const { return generator_.cols(); }
  // q^k, or throws CapExceeded beyond the enumeration cap.
  std::uint64_t size() const;

  std::vector<Symbol> encode(std::span<const Symbol> message) const;

 private:
  FieldTable field_;
  SymbolMatrix generator_;
};

struct CodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d_min = 0;
  // n + 1 when the dual code is {0}.
  std::size_t d_dual = 0;
};

// Message number `index` in lexicographic order (last coordinate fastest).
std::vector<Symbol> message_from_index(std::uint64_t index, std::size_t k, int q);
std::uint64_t index_from_message(std::span<const Symbol> message, int q);

// Rank over GF(q) by Gaussian elimination.
std::size_t rank(const FieldTable& field, const SymbolMatrix& matrix);

// Column basis (cols x (cols - rank)) of the right nullspace {x : A x = 0},
// one vector per free column of the reduced row echelon form.
SymbolMatrix nullspace(const FieldTable& field, const SymbolMatrix& matrix);

// Parity-check matrix of the Hamming code: every projective point of
// F_q^redundancy, first nonzero coordinate 1, in lexicographic order.
SymbolMatrix hamming_parity_check(const FieldTable& field, int redundancy);

// The [(q^m-1)/(q-1), (q^m-1)/(q-1) - m, 3]_q Hamming code.
LinearCode hamming_code(const FieldTable& field, int redundancy);

// C-perp under sum_i x_i y_i. Throws when k == n (the dual is {0}).
LinearCode dual_code(const LinearCode& code);

// All q^k codewords as columns, messages in lexicographic order.
SymbolMatrix codewords(const LinearCode& code);

std::size_t weight(std::span<const Symbol> word);

// Minimum nonzero weight: exhaustive over the q^k codewords, or through row
// dependencies of the dual generator when q^k exceeds the enumeration cap.
std::size_t min_distance(const LinearCode& code);

// Minimum distance of the dual: the smallest number of linearly dependent
// rows of G; n + 1 when k == n.
std::size_t dual_distance(const LinearCode& code);

CodeReport analyze(const LinearCode& code);

// k x k identity generator: the whole space F_q^k.
LinearCode identity_code(const FieldTable& field, std::size_t k);

}  // namespace eoa
