#include "eoa/linear_code.hpp"

#include <limits>
#include <optional>
#include <string>

#include "eoa/error.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

std::uint64_t checked_power(int q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= static_cast<std::uint64_t>(q);
    if (out > kCaps.enumeration)
      throw CapExceeded(std::to_string(q) + "^" + std::to_string(k) +
                        " codewords exceed enumeration cap " +
                        std::to_string(kCaps.enumeration) +
                        "; supply the distance externally");
  }
  return out;
}

bool power_exceeds_cap(int q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= static_cast<std::uint64_t>(q);
    if (out > kCaps.enumeration) return true;
  }
  return false;
}

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> row_reduce(const FieldTable& f, SymbolMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    const Symbol scale = f.inv(a(row, col));
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) = f.mul(a(row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Symbol factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        a(r, c) = f.sub(a(r, c), f.mul(factor, a(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

SymbolMatrix transpose(const SymbolMatrix& a) {
  SymbolMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

}  // namespace

LinearCode::LinearCode(FieldTable field, SymbolMatrix generator)
    : field_(std::move(field)), generator_(std::move(generator)) {
  const std::size_t n = generator_.rows();
  const std::size_t k = generator_.cols();
  if (k < 1 || k > n)
    throw Error("code needs 1 <= k <= n, got n=" + std::to_string(n) +
                " k=" + std::to_string(k));
  if (n > kCaps.code_length)
    throw CapExceeded("code length " + std::to_string(n) + " exceeds cap");
  for (Symbol s : generator_.data())
    if (!field_.contains(s))
      throw Error("generator symbol " + std::to_string(s) + " is not in GF(" +
                  std::to_string(field_.order()) + ")");
  if (eoa::rank(field_, generator_) != k)
    throw Error("generator matrix does not have full column rank " + std::to_string(k));
}

std::uint64_t LinearCode::size() const { return checked_power(field_.order(), dimension()); }

std::vector<Symbol> LinearCode::encode(std::span<const Symbol> message) const {
  if (message.size() != dimension())
    throw Error("message has " + std::to_string(message.size()) + " symbols, code dimension is " +
                std::to_string(dimension()));
  for (Symbol s : message)
    if (!field_.contains(s)) throw Error("message symbol out of range");
  std::vector<Symbol> out(length(), 0);
  for (std::size_t r = 0; r < length(); ++r) {
    Symbol acc = 0;
    for (std::size_t c = 0; c < dimension(); ++c)
      acc = field_.add(acc, field_.mul(generator_(r, c), message[c]));
    out[r] = acc;
  }
  return out;
}

std::vector<Symbol> message_from_index(std::uint64_t index, std::size_t k, int q) {
  std::vector<Symbol> out(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return out;
}

std::uint64_t index_from_message(std::span<const Symbol> message, int q) {
  std::uint64_t index = 0;
  for (Symbol s : message) index = index * static_cast<std::uint64_t>(q) + s;
  return index;
}

std::size_t rank(const FieldTable& field, const SymbolMatrix& matrix) {
  SymbolMatrix work = matrix;
  return row_reduce(field, work).size();
}

SymbolMatrix nullspace(const FieldTable& field, const SymbolMatrix& matrix) {
  SymbolMatrix work = matrix;
  const auto pivots = row_reduce(field, work);
  std::vector<bool> is_pivot(work.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < work.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  SymbolMatrix basis(work.cols(), free_cols.size(), 0);
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    basis(fc, j) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], j) = field.neg(work(r, fc));
  }
  return basis;
}

SymbolMatrix hamming_parity_check(const FieldTable& field, int redundancy) {
  if (redundancy < 2) throw Error("Hamming redundancy must be >= 2");
  const int q = field.order();
  const std::uint64_t total = checked_power(q, static_cast<std::size_t>(redundancy));
  const std::uint64_t n = (total - 1) / static_cast<std::uint64_t>(q - 1);
  if (n > kCaps.code_length)
    throw CapExceeded("Hamming length " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kCaps.code_length));

  SymbolMatrix h(static_cast<std::size_t>(redundancy), static_cast<std::size_t>(n));
  std::size_t col = 0;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const auto v = message_from_index(idx, static_cast<std::size_t>(redundancy), q);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    h.set_column(col++, v);
  }
  return h;
}

LinearCode hamming_code(const FieldTable& field, int redundancy) {
  return LinearCode(field, nullspace(field, hamming_parity_check(field, redundancy)));
}

LinearCode dual_code(const LinearCode& code) {
  if (code.dimension() == code.length())
    throw Error("dual of the full space F_q^n is the zero code");
  return LinearCode(code.field(), nullspace(code.field(), transpose(code.generator())));
}

SymbolMatrix codewords(const LinearCode& code) {
  const std::uint64_t count = code.size();
  const int q = code.field().order();
  SymbolMatrix out(code.length(), static_cast<std::size_t>(count));
  for (std::uint64_t j = 0; j < count; ++j)
    out.set_column(static_cast<std::size_t>(j),
                   code.encode(message_from_index(j, code.dimension(), q)));
  return out;
}

std::size_t weight(std::span<const Symbol> word) {
  std::size_t w = 0;
  for (Symbol s : word) w += (s != 0);
  return w;
}

namespace {

std::size_t enumerated_min_distance(const LinearCode& code) {
  const std::uint64_t count = code.size();
  const int q = code.field().order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t j = 1; j < count; ++j) {
    const auto word = code.encode(message_from_index(j, code.dimension(), q));
    best = std::min(best, weight(word));
    if (best == 1) break;
  }
  return best;
}

// C(n, s) saturated just above `limit`.
std::uint64_t binomial_capped(std::size_t n, std::size_t s, std::uint64_t limit) {
  std::uint64_t acc = 1;  // acc <= limit before each step, so no overflow
  for (std::size_t i = 1; i <= s; ++i) {
    acc = acc * (n - s + i) / i;
    if (acc > limit) return limit + 1;
  }
  return acc;
}

// Whether some s rows of G are linearly dependent.
bool has_dependent_rows(const LinearCode& code, std::size_t s) {
  const auto& g = code.generator();
  const std::size_t n = code.length(), k = code.dimension();
  std::vector<std::size_t> pick(s);
  for (std::size_t i = 0; i < s; ++i) pick[i] = i;
  SymbolMatrix sub(s, k);
  while (true) {
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t c = 0; c < k; ++c) sub(i, c) = g(pick[i], c);
    if (rank(code.field(), sub) < s) return true;
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Minimum weight of the dual as the smallest number of dependent rows of G.
// Any k + 1 rows are dependent, so only subsets of size <= k are scanned;
// nullopt when that scan would exceed the enumeration cap.
std::optional<std::size_t> dependency_distance(const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  std::uint64_t subsets = 0;
  for (std::size_t s = 1; s <= k; ++s) {
    subsets += binomial_capped(n, s, kCaps.enumeration);
    if (subsets > kCaps.enumeration) return std::nullopt;
  }
  for (std::size_t s = 1; s <= k; ++s)
    if (has_dependent_rows(code, s)) return s;
  return k + 1;
}

}  // namespace

std::size_t min_distance(const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  if (k < n && power_exceeds_cap(code.field().order(), k)) {
    if (auto d = dependency_distance(dual_code(code))) return *d;
  }
  return enumerated_min_distance(code);
}

std::size_t dual_distance(const LinearCode& code) {
  const std::size_t n = code.length(), k = code.dimension();
  if (k == n) return n + 1;
  if (auto d = dependency_distance(code)) return *d;
  return enumerated_min_distance(dual_code(code));
}

CodeReport analyze(const LinearCode& code) {
  return CodeReport{code.length(), code.dimension(), min_distance(code), dual_distance(code)};
}

LinearCode identity_code(const FieldTable& field, std::size_t k) {
  SymbolMatrix g(k, k, 0);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = 1;
  return LinearCode(field, std::move(g));
}

}  // namespace eoa
