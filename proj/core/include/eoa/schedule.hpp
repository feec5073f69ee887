#pragma once

#include <string>
#include <vector>

#include "eoa/cayley_euler.hpp"
#include "eoa/orthogonal_array.hpp"
#include "eoa/weyl.hpp"

namespace eoa {

enum class ScheduleMode { BangBang, Eulerian };

std::string to_string(ScheduleMode mode);
ScheduleMode schedule_mode_from_string(const std::string& name);

// One subinterval of length delta.
//  - BangBang: labels[k] = g_kj, the control propagator held on qudit k
//    for the whole segment; hamiltonians is empty.
//  - Eulerian: labels[k] = s_kj = g_{k,j+1} - g_kj, and hamiltonians[k] is the
//    constant h_kj with exp(-i h_kj delta) = U_{s_kj}.
struct Segment {
  std::vector<GroupLabel> labels;
  std::vector<ComplexMatrix> hamiltonians;
};

struct Schedule {
  std::size_t n = 0;
  int d = 2;
  double delta = 0.1;
  ScheduleMode mode = ScheduleMode::BangBang;
  std::vector<Segment> segments;

  std::size_t size() const { return segments.size(); }
  double cycle_time() const { return delta * static_cast<double>(segments.size()); }
};

// Hermitian h with exp(-i h delta) = U: -(1/delta) times the principal
// logarithm of U, eigenphases in (-pi, pi]. ||h||_2 <= pi / delta.
// Throws Error for non-unitary U or delta <= 0.
ComplexMatrix generator_hamiltonian(const ComplexMatrix& u, double delta);

// Segment j holds the tensor product of weyl_from_field over column j.
Schedule bangbang_schedule(const SymbolMatrix& entries, const FieldTable& field, double delta);
Schedule bangbang_schedule(const OrthogonalArray& oa, const FieldTable& field, double delta);

// Bounded-strength schedule following the cyclic column transitions of any
// array. Does not check the Eulerian property; euler_schedule does.
Schedule transition_schedule(const SymbolMatrix& entries, const FieldTable& field, double delta);
Schedule euler_schedule(const EulerianOA& array, double delta);

// Max over segments and qudits of exp(-i h delta) vs U_s phase distance; the
// check run on re-imported schedules. Zero for bang-bang schedules.
double schedule_unitary_error(const Schedule& schedule);

}  // namespace eoa
