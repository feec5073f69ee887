#include "eoa/averaging.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "eoa/error.hpp"
#include "eoa/parallel.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {
namespace {

// Spectral data of a Hermitian generator: h = W diag(lambda) W^dag.
struct Spectral {
  ComplexMatrix basis;
  Eigen::VectorXd values;
};

Spectral diagonalize(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  return {eig.eigenvectors(), eig.eigenvalues()};
}

// (e^{i x} - 1) / (i x), with its Taylor series near zero.
Complex segment_kernel(double x) {
  if (std::abs(x) < kTolerances.kernel_series)
    return Complex(1.0 - x * x / 6.0, x / 2.0 - x * x * x / 24.0);
  return (std::polar(1.0, x) - 1.0) / Complex(0.0, x);
}

ComplexMatrix exact_average(const ComplexMatrix& x, const Spectral& spec, const ComplexMatrix& v,
                            double delta) {
  const ComplexMatrix& w = spec.basis;
  ComplexMatrix rotated = w.adjoint() * x * w;
  for (Eigen::Index a = 0; a < rotated.rows(); ++a)
    for (Eigen::Index b = 0; b < rotated.cols(); ++b)
      rotated(a, b) *= segment_kernel((spec.values(a) - spec.values(b)) * delta);
  const ComplexMatrix wv = w.adjoint() * v;
  return wv.adjoint() * rotated * wv;
}

ComplexMatrix quadrature_average(const ComplexMatrix& x, const ComplexMatrix& h,
                                 const ComplexMatrix& v, double delta, int order) {
  const auto rule = gauss_legendre(order);
  ComplexMatrix acc = ComplexMatrix::Zero(x.rows(), x.cols());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double tau = 0.5 * delta * (rule.nodes[i] + 1.0);
    const ComplexMatrix gen = Complex(0.0, -tau) * h;
    const ComplexMatrix u = gen.exp() * v;
    acc += (0.5 * rule.weights[i]) * (u.adjoint() * x * u);
  }
  return acc;
}

std::uint64_t int_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// Per-segment control data restricted to one qudit.
struct LocalSegment {
  ComplexMatrix frame;   // control propagator at the segment start
  ComplexMatrix h;       // Eulerian only
  const Spectral* spec;  // Eulerian only
};

// Everything needed to evaluate a term on its support, indexed [segment][qudit].
struct ControlTrack {
  std::vector<std::vector<LocalSegment>> local;
  std::vector<Spectral> spectra;  // owned storage behind LocalSegment::spec
};

ControlTrack build_track(const Schedule& s) {
  ControlTrack track;
  const std::size_t runs = s.size();
  track.local.assign(runs, std::vector<LocalSegment>(s.n));
  if (s.mode == ScheduleMode::BangBang) {
    for (std::size_t j = 0; j < runs; ++j)
      for (std::size_t k = 0; k < s.n; ++k)
        track.local[j][k] = {weyl(s.d, s.segments[j].labels[k]), {}, nullptr};
    return track;
  }
  track.spectra.reserve(runs * s.n);
  std::vector<ComplexMatrix> running(s.n, ComplexMatrix::Identity(s.d, s.d));
  for (std::size_t j = 0; j < runs; ++j) {
    const auto& seg = s.segments[j];
    if (seg.hamiltonians.size() != s.n || seg.labels.size() != s.n)
      throw Error("segment " + std::to_string(j) + " does not cover all qudits");
    for (std::size_t k = 0; k < s.n; ++k) {
      track.spectra.push_back(diagonalize(seg.hamiltonians[k]));
      track.local[j][k] = {running[k], seg.hamiltonians[k], &track.spectra.back()};
      running[k] = weyl(s.d, seg.labels[k]) * running[k];
    }
  }
  return track;
}

ComplexMatrix kron_over(const std::vector<std::size_t>& support,
                        const std::vector<LocalSegment>& local,
                        ComplexMatrix LocalSegment::*field) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (auto k : support) out = kron(out, local[k].*field);
  return out;
}

// Average of one term operator (on support (x) environment) over the cycle.
ComplexMatrix average_term(const ComplexMatrix& op, const std::vector<std::size_t>& support,
                           int env_dim, const Schedule& s, const ControlTrack& track,
                           AveragingMethod method) {
  const ComplexMatrix env_id = ComplexMatrix::Identity(env_dim, env_dim);
  ComplexMatrix acc = ComplexMatrix::Zero(op.rows(), op.cols());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const auto& local = track.local[j];
    const ComplexMatrix frame = kron(kron_over(support, local, &LocalSegment::frame), env_id);
    if (s.mode == ScheduleMode::BangBang) {
      acc += frame.adjoint() * op * frame;
      continue;
    }
    if (method.kind == AveragingMethod::Kind::Exact) {
      // Eigenbasis of a sum of commuting local generators is the tensor
      // product of local eigenbases, eigenvalues add.
      Spectral joint{ComplexMatrix::Identity(1, 1), Eigen::VectorXd::Zero(1)};
      for (auto k : support) {
        const Spectral& ls = *local[k].spec;
        joint.basis = kron(joint.basis, ls.basis);
        Eigen::VectorXd vals(joint.values.size() * ls.values.size());
        for (Eigen::Index a = 0; a < joint.values.size(); ++a)
          for (Eigen::Index b = 0; b < ls.values.size(); ++b)
            vals(a * ls.values.size() + b) = joint.values(a) + ls.values(b);
        joint.values = std::move(vals);
      }
      joint.basis = kron(joint.basis, env_id);
      Eigen::VectorXd vals(joint.values.size() * env_dim);
      for (Eigen::Index a = 0; a < joint.values.size(); ++a)
        for (int e = 0; e < env_dim; ++e) vals(a * env_dim + e) = joint.values(a);
      joint.values = std::move(vals);
      acc += exact_average(op, joint, frame, s.delta);
    } else {
      ComplexMatrix h = ComplexMatrix::Zero(op.rows(), op.cols());
      const std::size_t t = support.size();
      for (std::size_t i = 0; i < t; ++i) {
        const std::size_t single[] = {i};
        h += kron(embed(local[support[i]].h, single, t, s.d), env_id);
      }
      acc += quadrature_average(op, h, frame, s.delta, method.order);
    }
  }
  return acc / static_cast<double>(s.size());
}

// Splits an operator on support (x) environment into Weyl strings:
// A = sum_L W_L (x) E_L with E_L = d^{-t} tr_S[(W_L^dag (x) I) A].
// Keys are full-register label strings, base d^2 per qudit, qudit 0 most
// significant; label (a, b) contributes digit a + d b.
void accumulate_weyl_components(const ComplexMatrix& avg, const std::vector<std::size_t>& support,
                                std::size_t n, int d, int env_dim,
                                std::map<std::uint64_t, ComplexMatrix>& out) {
  const std::size_t t = support.size();
  const std::uint64_t d2 = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
  const std::uint64_t labels = int_pow(d2, t);
  const auto sub = static_cast<Eigen::Index>(int_pow(static_cast<std::uint64_t>(d), t));
  const double norm = 1.0 / static_cast<double>(sub);
  for (std::uint64_t l = 0; l < labels; ++l) {
    ComplexMatrix w = ComplexMatrix::Identity(1, 1);
    std::uint64_t key = 0;
    std::uint64_t rest = l;
    std::vector<std::uint64_t> digits(t);
    for (std::size_t i = t; i-- > 0;) {
      digits[i] = rest % d2;
      rest /= d2;
    }
    for (std::size_t i = 0; i < t; ++i) {
      const auto digit = digits[i];
      w = kron(w, weyl(d, GroupLabel{static_cast<int>(digit % static_cast<std::uint64_t>(d)),
                                     static_cast<int>(digit / static_cast<std::uint64_t>(d))}));
      key += digit * int_pow(d2, n - 1 - support[i]);
    }
    ComplexMatrix e = ComplexMatrix::Zero(env_dim, env_dim);
    const ComplexMatrix wd = w.adjoint();
    for (Eigen::Index r = 0; r < sub; ++r)
      for (Eigen::Index c = 0; c < sub; ++c) {
        const Complex coeff = wd(r, c);
        if (coeff == Complex(0.0, 0.0)) continue;
        e += coeff * avg.block(c * env_dim, r * env_dim, env_dim, env_dim);
      }
    e *= norm;
    auto [it, inserted] = out.try_emplace(key, e);
    if (!inserted) it->second += e;
  }
}

}  // namespace

std::string AveragingMethod::name() const {
  return kind == Kind::Exact ? "exact" : "quadrature(" + std::to_string(order) + ")";
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw Error("quadrature order must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

ComplexMatrix segment_average(const ComplexMatrix& x, const ComplexMatrix& h,
                              const ComplexMatrix& v, double delta, AveragingMethod method) {
  if (x.rows() != x.cols() || h.rows() != x.rows() || h.cols() != x.cols() ||
      v.rows() != x.rows() || v.cols() != x.cols())
    throw Error("segment_average: dimensions of X, h, V must agree");
  if (!(delta > 0.0)) throw Error("segment duration must be positive");
  if (method.kind == AveragingMethod::Kind::Exact)
    return exact_average(x, diagonalize(h), v, delta);
  return quadrature_average(x, h, v, delta, method.order);
}

AverageReport average_hamiltonian(const Schedule& schedule, const DriftHamiltonian& h,
                                  AveragingMethod method) {
  h.validate();
  if (schedule.n != h.n || schedule.d != h.d)
    throw Error("schedule acts on " + std::to_string(schedule.n) + " qudits of dimension " +
                std::to_string(schedule.d) + ", drift on " + std::to_string(h.n) + " of dimension " +
                std::to_string(h.d));
  if (schedule.size() == 0) throw Error("schedule has no segments");

  const ControlTrack track = build_track(schedule);
  const std::size_t term_count = h.terms.size();

  // Slot term_count is the environment-only part, with empty support.
  std::vector<ComplexMatrix> averaged(term_count + 1);
  parallel_for(term_count + 1, [&](std::size_t i) {
    if (i == term_count) {
      averaged[i] = average_term(h.env_only, {}, h.env_dim, schedule, track, method);
      return;
    }
    const auto& term = h.terms[i];
    averaged[i] = average_term(kron(term.sys_block, term.env_block), term.support, h.env_dim,
                               schedule, track, method);
  });

  AverageReport report;
  report.mode = schedule.mode;
  report.method = method;
  report.segments = schedule.size();
  report.max_arity = h.max_arity();

  std::map<std::uint64_t, ComplexMatrix> components;
  for (std::size_t i = 0; i < term_count; ++i) {
    report.per_term_norms.push_back(averaged[i].norm());
    accumulate_weyl_components(averaged[i], h.terms[i].support, h.n, h.d, h.env_dim, components);
  }
  accumulate_weyl_components(averaged[term_count], {}, h.n, h.d, h.env_dim, components);
  components[0] -= h.env_only;

  const double sys_dim = static_cast<double>(int_pow(static_cast<std::uint64_t>(h.d), h.n));
  double total = 0.0;
  for (const auto& [key, e] : components) total += e.squaredNorm();
  report.residual_norm = std::sqrt(sys_dim * total);
  report.env_error = std::sqrt(sys_dim) * components[0].norm();
  return report;
}

AverageReport bangbang_average(const OrthogonalArray& oa, const FieldTable& field,
                               const DriftHamiltonian& h) {
  auto report = average_hamiltonian(bangbang_schedule(oa, field, 1.0), h);
  report.strength = oa.strength();
  report.strength_sufficient = oa.strength() >= report.max_arity;
  return report;
}

AverageReport eulerian_average(const EulerianOA& array, const DriftHamiltonian& h, double delta,
                               AveragingMethod method) {
  auto report = average_hamiltonian(euler_schedule(array, delta), h, method);
  report.strength = array.strength();
  report.strength_sufficient = array.strength() >= report.max_arity;
  return report;
}

ComplexMatrix single_cycle_average(const FieldTable& field, const EulerianCycle& cycle,
                                   const ComplexMatrix& x, double delta, AveragingMethod method) {
  if (cycle.k != 1 || cycle.q != field.order())
    throw Error("single_cycle_average needs a cycle over GF(d^2) itself (k = 1)");
  SymbolMatrix row(1, cycle.length());
  for (std::size_t j = 0; j < cycle.length(); ++j) row(0, j) = static_cast<Symbol>(cycle.vertices[j]);
  const Schedule s = transition_schedule(row, field, delta);
  if (x.rows() != s.d || x.cols() != s.d) throw Error("X must be d x d");
  const ControlTrack track = build_track(s);
  const std::vector<std::size_t> support{0};
  return average_term(x, support, 1, s, track, method);
}

ComplexMatrix fs_map(int d, std::span<const GroupLabel> generators, const ComplexMatrix& x,
                     double delta, AveragingMethod method) {
  if (generators.empty()) throw Error("F_S needs at least one generator");
  if (x.rows() != d || x.cols() != d) throw Error("X must be d x d");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const auto& s : generators)
    acc += segment_average(x, generator_hamiltonian(weyl(d, s), delta), id, delta, method);
  return acc / static_cast<double>(generators.size());
}

}  // namespace eoa
