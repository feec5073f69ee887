#pragma once

#include <vector>

#include "eoa/drift.hpp"
#include "eoa/schedule.hpp"

namespace eoa {

// Propagator over one control cycle on the full space (dimension capped by
// Caps::dense_dimension).
//  - Eulerian: time-ordered product of exp(-i (H + H_c,j) dt) over segments
//    and `substeps` equal substeps, H_c,j = sum_k h_kj on qudit k.
//  - BangBang: product of P_j^dag exp(-i H delta) P_j, i.e. free evolution
//    between instantaneous kicks that begin and end the cycle at identity.
ComplexMatrix exact_evolution(const DriftHamiltonian& h, const Schedule& schedule,
                              int substeps = 1);

// exp(-i H t) for Hermitian H.
ComplexMatrix hermitian_propagator(const ComplexMatrix& h, double time);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct ConvergenceSweep {
  std::vector<double> cycle_times;
  // Phase-insensitive distance between the cycle propagator and
  // exp(-i (I_S (x) H_E) T_c).
  std::vector<double> errors;
  double slope = 0.0;
};

// Rebuilds the schedule with delta, delta/2, ..., delta/2^(levels-1) at a
// fixed segment count and records the first-order error at each cycle time.
ConvergenceSweep convergence_sweep(const DriftHamiltonian& h, const SymbolMatrix& entries,
                                   const FieldTable& field, ScheduleMode mode, double delta,
                                   int levels, int substeps = 1);

}  // namespace eoa
