#include "eoa/evolution.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "eoa/error.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {

ComplexMatrix hermitian_propagator(const ComplexMatrix& h, double time) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const auto& w = eig.eigenvectors();
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * time);
  return w * phases.asDiagonal() * w.adjoint();
}

ComplexMatrix exact_evolution(const DriftHamiltonian& h, const Schedule& schedule, int substeps) {
  if (substeps < 1) throw Error("substeps must be >= 1");
  if (schedule.n != h.n || schedule.d != h.d) throw Error("schedule and drift disagree on n or d");
  const ComplexMatrix drift = h.total();  // enforces the dense cap
  const Eigen::Index dim = drift.rows();
  const ComplexMatrix env_id = ComplexMatrix::Identity(h.env_dim, h.env_dim);
  const double dt = schedule.delta / substeps;

  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  if (schedule.mode == ScheduleMode::BangBang) {
    const ComplexMatrix free = hermitian_propagator(drift, dt);
    for (const auto& seg : schedule.segments) {
      ComplexMatrix kick = ComplexMatrix::Identity(1, 1);
      for (const auto& label : seg.labels) kick = kron(kick, weyl(schedule.d, label));
      kick = kron(kick, env_id);
      ComplexMatrix step = ComplexMatrix::Identity(dim, dim);
      for (int i = 0; i < substeps; ++i) step = free * step;
      u = kick.adjoint() * step * kick * u;
    }
    return u;
  }

  for (const auto& seg : schedule.segments) {
    ComplexMatrix total = drift;
    for (std::size_t k = 0; k < schedule.n; ++k) {
      const std::size_t single[] = {k};
      total += kron(embed(seg.hamiltonians[k], single, schedule.n, schedule.d), env_id);
    }
    const ComplexMatrix step = hermitian_propagator(total, dt);
    for (int i = 0; i < substeps; ++i) u = step * u;
  }
  return u;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw Error("slope fit needs >= 2 points");
  double mx = 0, my = 0;
  const double count = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= count;
  my /= count;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

ConvergenceSweep convergence_sweep(const DriftHamiltonian& h, const SymbolMatrix& entries,
                                   const FieldTable& field, ScheduleMode mode, double delta,
                                   int levels, int substeps) {
  if (levels < 2) throw Error("a convergence sweep needs at least 2 levels");
  const auto sys_dim = static_cast<Eigen::Index>(h.full_dimension() / h.env_dim);
  const ComplexMatrix env_part = kron(ComplexMatrix::Identity(sys_dim, sys_dim), h.env_only);

  ConvergenceSweep sweep;
  double step = delta;
  for (int level = 0; level < levels; ++level, step /= 2.0) {
    const Schedule s = mode == ScheduleMode::BangBang ? bangbang_schedule(entries, field, step)
                                                      : transition_schedule(entries, field, step);
    const ComplexMatrix u = exact_evolution(h, s, substeps);
    const double tc = s.cycle_time();
    sweep.cycle_times.push_back(tc);
    sweep.errors.push_back(phase_distance(u, hermitian_propagator(env_part, tc)));
  }
  sweep.slope = loglog_slope(sweep.cycle_times, sweep.errors);
  return sweep;
}

}  // namespace eoa
