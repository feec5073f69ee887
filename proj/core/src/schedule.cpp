#include "eoa/schedule.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "eoa/error.hpp"
#include "eoa/evolution.hpp"

namespace eoa {
namespace {

void require_coords(const FieldTable& field) {
  if (!field.has_coords())
    throw Error("schedules need symbols from GF(d^2) with d prime, got GF(" +
                std::to_string(field.order()) + ")");
}

GroupLabel label_of(const FieldTable& field, Symbol s) {
  const auto c = field.coords(s);
  return {c.a, c.b};
}

}  // namespace

std::string to_string(ScheduleMode mode) {
  return mode == ScheduleMode::BangBang ? "bangbang" : "eulerian";
}

ScheduleMode schedule_mode_from_string(const std::string& name) {
  if (name == "bangbang") return ScheduleMode::BangBang;
  if (name == "eulerian") return ScheduleMode::Eulerian;
  throw Error("unknown schedule mode '" + name + "'");
}

ComplexMatrix generator_hamiltonian(const ComplexMatrix& u, double delta) {
  if (!(delta > 0.0)) throw Error("segment duration must be positive");
  if (!is_unitary(u, 1e-10)) throw Error("generator_hamiltonian needs a unitary matrix");
  // For a normal matrix the complex Schur form is diagonal and Q is unitary,
  // which stays well conditioned when eigenvalues are degenerate.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& q = schur.matrixU();
  const ComplexMatrix& t = schur.matrixT();
  Eigen::VectorXd theta(u.rows());
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    double phase = std::arg(t(i, i));
    if (phase <= -std::numbers::pi + 1e-12) phase = std::numbers::pi;
    theta(i) = phase;
  }
  ComplexMatrix h = -(q * theta.cast<Complex>().asDiagonal() * q.adjoint()) / delta;
  return (h + h.adjoint()) / 2.0;
}

Schedule bangbang_schedule(const SymbolMatrix& entries, const FieldTable& field, double delta) {
  require_coords(field);
  if (!(delta > 0.0)) throw Error("segment duration must be positive");
  Schedule s;
  s.n = entries.rows();
  s.d = field.coord_dim();
  s.delta = delta;
  s.mode = ScheduleMode::BangBang;
  s.segments.resize(entries.cols());
  for (std::size_t j = 0; j < entries.cols(); ++j) {
    auto& seg = s.segments[j];
    seg.labels.reserve(entries.rows());
    for (std::size_t k = 0; k < entries.rows(); ++k)
      seg.labels.push_back(label_of(field, entries(k, j)));
  }
  return s;
}

Schedule bangbang_schedule(const OrthogonalArray& oa, const FieldTable& field, double delta) {
  if (oa.levels() != field.order()) throw Error("array levels do not match the field");
  return bangbang_schedule(oa.entries(), field, delta);
}

Schedule transition_schedule(const SymbolMatrix& entries, const FieldTable& field, double delta) {
  require_coords(field);
  if (!(delta > 0.0)) throw Error("segment duration must be positive");
  const int d = field.coord_dim();
  const int q = field.order();

  std::vector<ComplexMatrix> h_of(static_cast<std::size_t>(q));
  for (int sym = 0; sym < q; ++sym)
    h_of[static_cast<std::size_t>(sym)] =
        generator_hamiltonian(weyl_from_field(field, static_cast<Symbol>(sym)), delta);

  Schedule s;
  s.n = entries.rows();
  s.d = d;
  s.delta = delta;
  s.mode = ScheduleMode::Eulerian;
  const std::size_t runs = entries.cols();
  s.segments.resize(runs);
  for (std::size_t j = 0; j < runs; ++j) {
    auto& seg = s.segments[j];
    for (std::size_t k = 0; k < entries.rows(); ++k) {
      const Symbol step = field.sub(entries(k, (j + 1) % runs), entries(k, j));
      seg.labels.push_back(label_of(field, step));
      seg.hamiltonians.push_back(h_of[step]);
    }
  }
  return s;
}

Schedule euler_schedule(const EulerianOA& array, double delta) {
  return transition_schedule(array.entries(), array.field(), delta);
}

double schedule_unitary_error(const Schedule& schedule) {
  if (schedule.mode == ScheduleMode::BangBang) return 0.0;
  double worst = 0.0;
  for (const auto& seg : schedule.segments)
    for (std::size_t k = 0; k < seg.labels.size(); ++k)
      worst = std::max(worst, phase_distance(hermitian_propagator(seg.hamiltonians[k], schedule.delta),
                                             weyl(schedule.d, seg.labels[k])));
  return worst;
}

}  // namespace eoa
