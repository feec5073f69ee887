#include "eoa/orthogonal_array.hpp"

#include <sstream>

#include "eoa/error.hpp"
#include "eoa/parallel.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

std::uint64_t power(int q, std::size_t t) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < t; ++i) out *= static_cast<std::uint64_t>(q);
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> row_subsets(std::size_t n, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  if (t > n) return out;
  std::vector<std::size_t> cur(t);
  for (std::size_t i = 0; i < t; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == n - t + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::uint64_t tuple_index(const SymbolMatrix& m, const std::vector<std::size_t>& rows,
                          std::size_t column, int q) {
  std::uint64_t idx = 0;
  for (auto r : rows) idx = idx * static_cast<std::uint64_t>(q) + m(r, column);
  return idx;
}

std::vector<Symbol> tuple_from_index(std::uint64_t index, std::size_t t, int q) {
  return message_from_index(index, t, q);
}

std::string StrengthViolation::describe() const {
  std::ostringstream os;
  os << "rows (";
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << ") tuple (";
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << int(tuple[i]);
  os << ") appears " << count << " times, expected " << expected;
  return os.str();
}

StrengthCheck verify_strength(const SymbolMatrix& m, int q, std::size_t t) {
  const std::size_t n = m.rows();
  const std::size_t runs = m.cols();
  if (t > n)
    throw Error("strength " + std::to_string(t) + " exceeds row count " + std::to_string(n));
  for (Symbol s : m.data())
    if (s >= q) throw Error("array symbol " + std::to_string(s) + " not below q=" + std::to_string(q));
  if (t == 0) return StrengthCheck{runs, std::nullopt};
  if (power(q, t) > kCaps.enumeration)
    throw CapExceeded("q^t = " + std::to_string(q) + "^" + std::to_string(t) + " exceeds cap");

  const std::uint64_t cells = power(q, t);
  const bool divisible = runs % cells == 0;
  const std::uint64_t lambda = runs / cells;
  const double expected = static_cast<double>(runs) / static_cast<double>(cells);

  const auto subsets = row_subsets(n, t);
  std::vector<std::optional<StrengthViolation>> found(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t s) {
    const auto& rows = subsets[s];
    std::vector<std::uint64_t> hist(cells, 0);
    for (std::size_t j = 0; j < runs; ++j) ++hist[tuple_index(m, rows, j, q)];
    std::uint64_t bad = cells;
    if (divisible) {
      for (std::uint64_t c = 0; c < cells && bad == cells; ++c)
        if (hist[c] != lambda) bad = c;
    } else {
      // No count can equal a fractional lambda; report the scarcest tuple.
      bad = 0;
      for (std::uint64_t c = 1; c < cells; ++c)
        if (hist[c] < hist[bad]) bad = c;
    }
    if (bad != cells)
      found[s] = StrengthViolation{rows, tuple_from_index(bad, t, q), hist[bad], expected};
  });

  for (auto& v : found)
    if (v) return StrengthCheck{0, std::move(v)};
  return StrengthCheck{lambda, std::nullopt};
}

std::size_t max_strength(const SymbolMatrix& m, int q) {
  std::size_t best = 0;
  for (std::size_t t = 1; t <= m.rows(); ++t) {
    if (power(q, t) > m.cols()) break;
    if (!verify_strength(m, q, t)) break;
    best = t;
  }
  return best;
}

OrthogonalArray OrthogonalArray::verified(SymbolMatrix entries, int q, std::size_t t) {
  auto check = verify_strength(entries, q, t);
  if (!check)
    throw Error("array is not an orthogonal array of strength " + std::to_string(t) + ": " +
                check.violation->describe());
  return OrthogonalArray(std::move(entries), q, t, check.lambda);
}

OrthogonalArray oa_from_code(const LinearCode& code, std::size_t d_dual) {
  if (d_dual < 2) throw Error("dual distance must be >= 2 for a nontrivial strength");
  if (d_dual - 1 > code.length())
    throw Error("dual distance " + std::to_string(d_dual) + " exceeds n + 1");
  return OrthogonalArray::verified(codewords(code), code.field().order(), d_dual - 1);
}

}  // namespace eoa
