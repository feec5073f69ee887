#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eoa/finite_field.hpp"
#include "eoa/linear_code.hpp"
#include "eoa/orthogonal_array.hpp"

namespace eoa {

// Closed walk in the Cayley graph of (F_q^k, +) with generating set F_q^k.
// Vertices are message indices (lexicographic order, see message_from_index);
// the walk is cyclic, vertex N-1 connects back to vertex 0.
struct EulerianCycle {
  int q = 0;
  std::size_t k = 0;
  std::vector<std::uint64_t> vertices;
  std::uint64_t multiplicity = 1;

  std::size_t length() const { return vertices.size(); }
};

// Hierholzer's algorithm on Gamma(F_q^k, F_q^k), one edge v -> v + s per
// generator s including the self-loop s = 0. Starts at 0 and takes unused
// generators in increasing index order; length q^{2k}. Deterministic.
EulerianCycle euler_cycle_full(const FieldTable& field, std::size_t k);

// Index of the vector sum / difference of two message indices in F_q^k.
std::uint64_t vector_add(const FieldTable& field, std::uint64_t a, std::uint64_t b,
                         std::size_t k);
std::uint64_t vector_sub(const FieldTable& field, std::uint64_t a, std::uint64_t b,
                         std::size_t k);

// Generating set found for one row subset: the distinct transitions, as
// tuple indices (first row most significant), sorted ascending.
struct SubsetGenerators {
  std::vector<std::size_t> rows;
  std::vector<std::uint64_t> generators;
};

enum class EulerianFailure {
  // Some (vertex, generator) pair occurs a different number of times.
  EdgeCount,
  // The transitions do not generate G^{x t}.
  NotGenerating,
  // Row subsets disagree on the edge multiplicity.
  InconsistentMultiplicity,
};

struct EulerianViolation {
  EulerianFailure kind = EulerianFailure::EdgeCount;
  std::vector<std::size_t> rows;
  std::vector<Symbol> vertex;
  std::vector<Symbol> generator;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;

  std::string describe() const;
};

struct EulerianCheck {
  std::uint64_t edge_multiplicity = 0;
  std::vector<SubsetGenerators> gensets;
  std::optional<EulerianViolation> violation;

  explicit operator bool() const { return !violation.has_value(); }
};

// For every t-row subset: project columns to t-tuples, take cyclic
// transitions s_j = c_{j+1} - c_j, let S be the distinct transitions, require
// every (vertex, s in S) pair to occur equally often, and require S to
// generate G^{x t}. The multiplicity must agree across subsets.
EulerianCheck verify_eulerian(const SymbolMatrix& m, const FieldTable& field, std::size_t t);

// Eulerian orthogonal array with its verification certificate.
class EulerianOA {
 public:
  // Runs verify_strength and verify_eulerian at t; throws Error on failure.
  static EulerianOA verified(SymbolMatrix entries, const FieldTable& field, std::size_t t);

  const OrthogonalArray& array() const { return oa_; }
  const SymbolMatrix& entries() const { return oa_.entries(); }
  const FieldTable& field() const { return field_; }
  std::size_t strength() const { return oa_.strength(); }
  std::uint64_t edge_multiplicity() const { return edge_multiplicity_; }
  const std::vector<SubsetGenerators>& gensets() const { return gensets_; }
  // Whether every recorded generating set is all of G^{x t}.
  bool full_generating_sets() const;

 private:
  EulerianOA(OrthogonalArray oa, FieldTable field, std::uint64_t mult,
             std::vector<SubsetGenerators> gensets)
      : oa_(std::move(oa)),
        field_(std::move(field)),
        edge_multiplicity_(mult),
        gensets_(std::move(gensets)) {}

  OrthogonalArray oa_;
  FieldTable field_;
  std::uint64_t edge_multiplicity_ = 0;
  std::vector<SubsetGenerators> gensets_;
};

// Column j = G m_j for the cycle vertices m_j.
EulerianOA eulerian_oa_from_code(const LinearCode& code, const EulerianCycle& cycle,
                                 std::size_t t);

}  // namespace eoa
