#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eoa/linear_code.hpp"
#include "eoa/symbol_matrix.hpp"

namespace eoa {

// Row subsets of size t in lexicographic order: {0..t-1}, {0..t-2, t}, ...
std::vector<std::vector<std::size_t>> row_subsets(std::size_t n, std::size_t t);

// Encodes the t symbols (column j restricted to rows) as a base-q integer,
// first row most significant.
std::uint64_t tuple_index(const SymbolMatrix& m, const std::vector<std::size_t>& rows,
                          std::size_t column, int q);
std::vector<Symbol> tuple_from_index(std::uint64_t index, std::size_t t, int q);

struct StrengthViolation {
  std::vector<std::size_t> rows;
  std::vector<Symbol> tuple;
  std::uint64_t count = 0;
  // N / q^t; fractional when q^t does not divide N.
  double expected = 0.0;

  std::string describe() const;
};

// Either the common multiplicity lambda or the first offending
// (row subset, tuple, count), scanning subsets and tuples in lexicographic order.
struct StrengthCheck {
  std::uint64_t lambda = 0;
  std::optional<StrengthViolation> violation;

  explicit operator bool() const { return !violation.has_value(); }
};

// Exhaustive count over all C(n, t) row subsets. t == 0 always passes with
// lambda = N. Throws Error for t > n or out-of-range symbols.
StrengthCheck verify_strength(const SymbolMatrix& m, int q, std::size_t t);

// Largest t with verify_strength success (0 if t = 1 fails).
std::size_t max_strength(const SymbolMatrix& m, int q);

// OA_lambda(N, n, q, t) whose declared parameters have been checked.
class OrthogonalArray {
 public:
  // Verifies strength t; throws Error with the violation on failure.
  static OrthogonalArray verified(SymbolMatrix entries, int q, std::size_t t);

  int levels() const { return q_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t runs() const { return entries_.cols(); }
  std::size_t strength() const { return t_; }
  std::uint64_t lambda() const { return lambda_; }
  const SymbolMatrix& entries() const { return entries_; }

 private:
  OrthogonalArray(SymbolMatrix entries, int q, std::size_t t, std::uint64_t lambda)
      : entries_(std::move(entries)), q_(q), t_(t), lambda_(lambda) {}

  SymbolMatrix entries_;
  int q_ = 0;
  std::size_t t_ = 0;
  std::uint64_t lambda_ = 0;
};

// Codewords of C as columns form OA(q^k, n, q, d_dual - 1). Throws Error if
// d_dual < 2 or if the array fails verification at the claimed strength.
OrthogonalArray oa_from_code(const LinearCode& code, std::size_t d_dual);

}  // namespace eoa
