#pragma once

#include <cstdint>
#include <vector>

#include "eoa/weyl.hpp"

namespace eoa {

// One few-body piece sys_block (x) env_block acting on the listed qudits.
// Pure system terms carry env_block = I_E.
struct DriftTerm {
  std::vector<std::size_t> support;  // 0-based, strictly increasing
  ComplexMatrix sys_block;           // d^t x d^t, traceless Hermitian
  ComplexMatrix env_block;           // d_E x d_E, Hermitian
};

// H = sum_terms embed(sys) (x) env + I_S (x) env_only on (C^d)^{n} (x) C^{d_E}.
// The environment is the least significant tensor factor.
struct DriftHamiltonian {
  std::size_t n = 0;
  int d = 2;
  int env_dim = 1;
  std::vector<DriftTerm> terms;
  ComplexMatrix env_only;  // d_E x d_E

  // Throws Error on any broken invariant (dimensions, support order,
  // tracelessness, hermiticity).
  void validate() const;
  std::size_t max_arity() const;
  // Dense operator on the full space; throws CapExceeded past the dense cap.
  ComplexMatrix total() const;
  std::uint64_t full_dimension() const;
};

// Random traceless Hermitian matrix with unit Frobenius norm.
ComplexMatrix random_traceless_hermitian(int dim, std::uint64_t seed);

// Seeded t-body drift: for every t-subset of the n qudits a unit-norm
// traceless Hermitian system term and, when d_E > 1, a coupling term whose
// env_block is a random unit-norm Hermitian matrix. H_E is random when d_E > 1
// and zero otherwise.
DriftHamiltonian random_drift(std::size_t n, int d, std::size_t arity, int env_dim,
                              std::uint64_t seed);

}  // namespace eoa
