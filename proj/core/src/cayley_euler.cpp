#include "eoa/cayley_euler.hpp"

#include <algorithm>
#include <sstream>

#include "eoa/error.hpp"
#include "eoa/parallel.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

std::uint64_t power(int q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= static_cast<std::uint64_t>(q);
  return out;
}

// Precomputed vector addition on F_q^k as a dense |V| x |V| table.
std::vector<std::uint64_t> addition_table(const FieldTable& field, std::size_t k) {
  const std::uint64_t size = power(field.order(), k);
  std::vector<std::uint64_t> table(size * size);
  for (std::uint64_t a = 0; a < size; ++a)
    for (std::uint64_t b = 0; b < size; ++b) table[a * size + b] = vector_add(field, a, b, k);
  return table;
}

void append_tuple(std::ostringstream& os, const std::vector<Symbol>& v) {
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
  os << ")";
}

}  // namespace

std::uint64_t vector_add(const FieldTable& field, std::uint64_t a, std::uint64_t b,
                         std::size_t k) {
  const int q = field.order();
  const auto va = message_from_index(a, k, q);
  const auto vb = message_from_index(b, k, q);
  std::vector<Symbol> sum(k);
  for (std::size_t i = 0; i < k; ++i) sum[i] = field.add(va[i], vb[i]);
  return index_from_message(sum, q);
}

std::uint64_t vector_sub(const FieldTable& field, std::uint64_t a, std::uint64_t b,
                         std::size_t k) {
  const int q = field.order();
  const auto va = message_from_index(a, k, q);
  const auto vb = message_from_index(b, k, q);
  std::vector<Symbol> diff(k);
  for (std::size_t i = 0; i < k; ++i) diff[i] = field.sub(va[i], vb[i]);
  return index_from_message(diff, q);
}

EulerianCycle euler_cycle_full(const FieldTable& field, std::size_t k) {
  if (k < 1) throw Error("cycle dimension k must be >= 1");
  const int q = field.order();
  std::uint64_t group = 1;
  for (std::size_t i = 0; i < k; ++i) {
    group *= static_cast<std::uint64_t>(q);
    if (group * group > kCaps.cycle_length)
      throw CapExceeded("Euler cycle length q^{2k} exceeds cap " +
                        std::to_string(kCaps.cycle_length));
  }
  const auto add = addition_table(field, k);

  // next_gen[v] is the smallest generator not yet used from v.
  std::vector<std::uint64_t> next_gen(group, 0);
  std::vector<std::uint64_t> stack{0};
  std::vector<std::uint64_t> circuit;
  circuit.reserve(group * group + 1);
  while (!stack.empty()) {
    const std::uint64_t v = stack.back();
    if (next_gen[v] < group) {
      const std::uint64_t s = next_gen[v]++;
      stack.push_back(add[v * group + s]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();  // closing return to 0

  EulerianCycle out;
  out.q = q;
  out.k = k;
  out.vertices = std::move(circuit);
  out.multiplicity = 1;
  return out;
}

std::string EulerianViolation::describe() const {
  std::ostringstream os;
  os << "rows (";
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << rows[i];
  os << "): ";
  switch (kind) {
    case EulerianFailure::EdgeCount:
      os << "edge from vertex ";
      append_tuple(os, vertex);
      os << " along generator ";
      append_tuple(os, generator);
      os << " used " << count << " times, expected " << expected;
      break;
    case EulerianFailure::NotGenerating:
      os << "transitions generate a subgroup of order " << count << ", expected " << expected;
      break;
    case EulerianFailure::InconsistentMultiplicity:
      os << "edge multiplicity " << count << " differs from " << expected
         << " found on the first row subset";
      break;
  }
  return os.str();
}

EulerianCheck verify_eulerian(const SymbolMatrix& m, const FieldTable& field, std::size_t t) {
  const std::size_t n = m.rows();
  const std::size_t runs = m.cols();
  const int q = field.order();
  if (t < 1 || t > n)
    throw Error("Eulerian strength must be in [1, n], got " + std::to_string(t));
  for (Symbol s : m.data())
    if (!field.contains(s)) throw Error("array symbol outside the field");
  const std::uint64_t group = power(q, t);
  if (group * group > kCaps.enumeration)
    throw CapExceeded("Eulerian verification table for q^t = " + std::to_string(group) +
                      " exceeds cap");
  if (runs == 0) throw Error("array has no columns");

  const auto add = addition_table(field, t);
  std::vector<std::uint64_t> negate(group);
  for (std::uint64_t v = 0; v < group; ++v) negate[v] = vector_sub(field, 0, v, t);
  const auto subsets = row_subsets(n, t);

  struct SubsetResult {
    std::uint64_t lambda = 0;
    SubsetGenerators gens;
    std::optional<EulerianViolation> violation;
  };
  std::vector<SubsetResult> results(subsets.size());

  parallel_for(subsets.size(), [&](std::size_t idx) {
    const auto& rows = subsets[idx];
    auto& res = results[idx];
    res.gens.rows = rows;

    std::vector<std::uint64_t> proj(runs);
    for (std::size_t j = 0; j < runs; ++j) proj[j] = tuple_index(m, rows, j, q);

    // pair_count[v * group + s]
    std::vector<std::uint64_t> pair_count(group * group, 0);
    std::vector<bool> in_s(group, false);
    for (std::size_t j = 0; j < runs; ++j) {
      const std::uint64_t from = proj[j];
      const std::uint64_t to = proj[(j + 1) % runs];
      const std::uint64_t s = add[to * group + negate[from]];
      ++pair_count[from * group + s];
      in_s[s] = true;
    }
    for (std::uint64_t s = 0; s < group; ++s)
      if (in_s[s]) res.gens.generators.push_back(s);

    const std::uint64_t expected =
        runs / (group * static_cast<std::uint64_t>(res.gens.generators.size()));
    for (std::uint64_t v = 0; v < group && !res.violation; ++v) {
      for (std::uint64_t s : res.gens.generators) {
        const std::uint64_t c = pair_count[v * group + s];
        if (c != expected || expected == 0) {
          res.violation = EulerianViolation{EulerianFailure::EdgeCount, rows,
                                            tuple_from_index(v, t, q),
                                            tuple_from_index(s, t, q), c, expected};
          break;
        }
      }
    }
    if (res.violation) return;
    res.lambda = expected;

    // Subgroup generated by S: closure from 0 under adding generators.
    std::vector<bool> reached(group, false);
    std::vector<std::uint64_t> frontier{0};
    reached[0] = true;
    std::uint64_t reached_count = 1;
    while (!frontier.empty()) {
      const std::uint64_t v = frontier.back();
      frontier.pop_back();
      for (std::uint64_t s : res.gens.generators) {
        const std::uint64_t w = add[v * group + s];
        if (!reached[w]) {
          reached[w] = true;
          ++reached_count;
          frontier.push_back(w);
        }
      }
    }
    if (reached_count != group)
      res.violation = EulerianViolation{EulerianFailure::NotGenerating, rows, {}, {},
                                        reached_count, group};
  });

  EulerianCheck out;
  for (auto& res : results) {
    if (res.violation) {
      out.violation = std::move(res.violation);
      out.gensets.clear();
      return out;
    }
    if (out.gensets.empty()) {
      out.edge_multiplicity = res.lambda;
    } else if (res.lambda != out.edge_multiplicity) {
      out.violation = EulerianViolation{EulerianFailure::InconsistentMultiplicity,
                                        res.gens.rows, {}, {}, res.lambda,
                                        out.edge_multiplicity};
      out.gensets.clear();
      out.edge_multiplicity = 0;
      return out;
    }
    out.gensets.push_back(std::move(res.gens));
  }
  return out;
}

bool EulerianOA::full_generating_sets() const {
  const std::uint64_t group = power(field_.order(), strength());
  return std::all_of(gensets_.begin(), gensets_.end(), [&](const SubsetGenerators& g) {
    return g.generators.size() == group;
  });
}

EulerianOA EulerianOA::verified(SymbolMatrix entries, const FieldTable& field, std::size_t t) {
  auto euler = verify_eulerian(entries, field, t);
  if (!euler)
    throw Error("array is not Eulerian at strength " + std::to_string(t) + ": " +
                euler.violation->describe());
  auto oa = OrthogonalArray::verified(std::move(entries), field.order(), t);
  return EulerianOA(std::move(oa), field, euler.edge_multiplicity, std::move(euler.gensets));
}

EulerianOA eulerian_oa_from_code(const LinearCode& code, const EulerianCycle& cycle,
                                 std::size_t t) {
  const int q = code.field().order();
  if (cycle.q != q || cycle.k != code.dimension())
    throw Error("cycle is over F_" + std::to_string(cycle.q) + "^" + std::to_string(cycle.k) +
                " but the code needs F_" + std::to_string(q) + "^" +
                std::to_string(code.dimension()));
  SymbolMatrix entries(code.length(), cycle.length());
  for (std::size_t j = 0; j < cycle.length(); ++j)
    entries.set_column(j, code.encode(message_from_index(cycle.vertices[j], cycle.k, q)));
  return EulerianOA::verified(std::move(entries), code.field(), t);
}

}  // namespace eoa
