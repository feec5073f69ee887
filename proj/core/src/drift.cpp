#include "eoa/drift.hpp"

#include <random>
#include <string>

#include "eoa/error.hpp"
#include "eoa/orthogonal_array.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

ComplexMatrix gaussian_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  return (g + g.adjoint()) / 2.0;
}

ComplexMatrix unit_traceless(ComplexMatrix h) {
  h -= (h.trace() / static_cast<double>(h.rows())) * ComplexMatrix::Identity(h.rows(), h.cols());
  return h / h.norm();
}

std::uint64_t int_pow(int base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= static_cast<std::uint64_t>(base);
  return out;
}

}  // namespace

void DriftHamiltonian::validate() const {
  if (d < 2) throw Error("local dimension must be >= 2");
  if (env_dim < 1) throw Error("environment dimension must be >= 1");
  if (env_only.rows() != env_dim || env_only.cols() != env_dim)
    throw Error("env_only must be d_E x d_E");
  if (!is_hermitian(env_only)) throw Error("env_only is not Hermitian");
  for (const auto& term : terms) {
    for (std::size_t i = 0; i < term.support.size(); ++i)
      if (term.support[i] >= n || (i > 0 && term.support[i] <= term.support[i - 1]))
        throw Error("term support must be strictly increasing qudit indices below n");
    if (term.support.empty()) throw Error("drift terms need a nonempty support");
    const auto sub = static_cast<Eigen::Index>(int_pow(d, term.support.size()));
    if (term.sys_block.rows() != sub || term.sys_block.cols() != sub)
      throw Error("sys_block dimension does not match its support");
    if (term.env_block.rows() != env_dim || term.env_block.cols() != env_dim)
      throw Error("env_block dimension does not match d_E");
    if (!is_hermitian(term.sys_block)) throw Error("sys_block is not Hermitian");
    if (!is_traceless(term.sys_block)) throw Error("sys_block is not traceless");
    if (!is_hermitian(term.env_block)) throw Error("env_block is not Hermitian");
  }
}

std::size_t DriftHamiltonian::max_arity() const {
  std::size_t out = 0;
  for (const auto& term : terms) out = std::max(out, term.support.size());
  return out;
}

std::uint64_t DriftHamiltonian::full_dimension() const {
  return int_pow(d, n) * static_cast<std::uint64_t>(env_dim);
}

ComplexMatrix DriftHamiltonian::total() const {
  const std::uint64_t dim = full_dimension();
  if (dim > kCaps.dense_dimension)
    throw CapExceeded("dense dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(kCaps.dense_dimension));
  const auto sys_dim = static_cast<Eigen::Index>(int_pow(d, n));
  ComplexMatrix h = kron(ComplexMatrix::Identity(sys_dim, sys_dim), env_only);
  for (const auto& term : terms) h += kron(embed(term.sys_block, term.support, n, d), term.env_block);
  return h;
}

ComplexMatrix random_traceless_hermitian(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return unit_traceless(gaussian_hermitian(dim, rng));
}

DriftHamiltonian random_drift(std::size_t n, int d, std::size_t arity, int env_dim,
                              std::uint64_t seed) {
  if (arity < 1 || arity > n) throw Error("arity must be in [1, n]");
  if (env_dim < 1) throw Error("environment dimension must be >= 1");
  const std::uint64_t sub = int_pow(d, arity);
  if (sub > kCaps.dense_dimension) throw CapExceeded("term dimension exceeds dense cap");

  std::mt19937_64 rng(seed);
  DriftHamiltonian h;
  h.n = n;
  h.d = d;
  h.env_dim = env_dim;
  const auto sub_dim = static_cast<int>(sub);
  const ComplexMatrix env_identity = ComplexMatrix::Identity(env_dim, env_dim);
  for (auto& support : row_subsets(n, arity)) {
    h.terms.push_back({support, unit_traceless(gaussian_hermitian(sub_dim, rng)), env_identity});
    if (env_dim > 1) {
      ComplexMatrix sys = unit_traceless(gaussian_hermitian(sub_dim, rng));
      ComplexMatrix env = gaussian_hermitian(env_dim, rng);
      env /= env.norm();
      h.terms.push_back({support, std::move(sys), std::move(env)});
    }
  }
  if (env_dim > 1) {
    h.env_only = gaussian_hermitian(env_dim, rng);
    h.env_only /= h.env_only.norm();
  } else {
    h.env_only = ComplexMatrix::Zero(1, 1);
  }
  return h;
}

}  // namespace eoa
