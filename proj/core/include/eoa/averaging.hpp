#pragma once

#include <span>
#include <string>
#include <vector>

#include "eoa/cayley_euler.hpp"
#include "eoa/drift.hpp"
#include "eoa/schedule.hpp"

namespace eoa {

// How a single segment's time integral is evaluated.
struct AveragingMethod {
  enum class Kind { Exact, Quadrature };
  Kind kind = Kind::Exact;
  int order = 24;  // Gauss-Legendre nodes, quadrature only

  static AveragingMethod exact() { return {Kind::Exact, 0}; }
  static AveragingMethod quadrature(int order) { return {Kind::Quadrature, order}; }
  std::string name() const;
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_legendre(int order);

// (1/delta) int_0^delta (u V)^dag X (u V) with u = exp(-i h tau).
// Exact: in the eigenbasis of h entry (a, b) of u^dag X u averages to
// X~_ab * phi(l_a - l_b), phi(mu) = (e^{i mu delta} - 1) / (i mu delta).
// Quadrature: Gauss-Legendre over tau with u from a Pade matrix exponential.
ComplexMatrix segment_average(const ComplexMatrix& x, const ComplexMatrix& h,
                              const ComplexMatrix& v, double delta, AveragingMethod method);

struct AverageReport {
  // ||H_bar - I_S (x) H_E||_F on the full space.
  double residual_norm = 0.0;
  // ||average of term i||_F on the term's own support (x) environment.
  std::vector<double> per_term_norms;
  // ||identity-string part of H_bar - I_S (x) H_E||_F on the full space.
  double env_error = 0.0;
  ScheduleMode mode = ScheduleMode::BangBang;
  AveragingMethod method = AveragingMethod::exact();
  std::size_t segments = 0;
  // Array strength when known, and whether it covers the drift's arity.
  std::size_t strength = 0;
  std::size_t max_arity = 0;
  bool strength_sufficient = true;
};

// First-order average Hamiltonian of H under any schedule, term by term on
// each term's support. The environment-only part goes through the same
// machinery (with an empty support) so its passthrough is measured.
AverageReport average_hamiltonian(const Schedule& schedule, const DriftHamiltonian& h,
                                  AveragingMethod method = AveragingMethod::exact());

// Bang-bang average over the array columns; strength < arity is reported via
// strength_sufficient rather than rejected.
AverageReport bangbang_average(const OrthogonalArray& oa, const FieldTable& field,
                               const DriftHamiltonian& h);

AverageReport eulerian_average(const EulerianOA& array, const DriftHamiltonian& h, double delta,
                               AveragingMethod method = AveragingMethod::exact());

// Q_C(X) for a single qudit driven along an Eulerian cycle over GF(d^2)
// (k = 1), vertices mapped to Z_d x Z_d by FieldTable::coords.
ComplexMatrix single_cycle_average(const FieldTable& field, const EulerianCycle& cycle,
                                   const ComplexMatrix& x, double delta,
                                   AveragingMethod method = AveragingMethod::exact());

// F_S(X) = (1/|S|) sum_s (1/delta) int u_s^dag X u_s.
ComplexMatrix fs_map(int d, std::span<const GroupLabel> generators, const ComplexMatrix& x,
                     double delta, AveragingMethod method = AveragingMethod::exact());

}  // namespace eoa
