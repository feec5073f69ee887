#include "eoa_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eoa/eoa.hpp"

namespace eoa::cli {
namespace {

// Every flag of every subcommand; unused fields keep their defaults.
struct RunConfig {
  std::string in, out, code_path, drift_path;
  int q = 0;
  int m = 2;
  bool dual = false;
  std::size_t k = 0;
  std::size_t rows = 0;
  std::optional<std::size_t> t;
  std::optional<std::size_t> n;
  double delta = 0.1;
  std::uint64_t seed = 0;
  int env_dim = 1;
  std::string method = "exact";
  int order = 24;
  int sweep_levels = 0;
  std::optional<double> sweep_delta;
  double tolerance = kTolerances.residual;
};

// Verification failures carry exit code 1; eoa::Error and friends map to 2.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Artifacts go to --out when given, otherwise to stdout; the one-line summary
// then moves to stderr so stdout stays a clean file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out, std::ostream& err)
      : path_(path), out_(out), err_(err) {}

  void artifact(const std::string& text) const {
    if (path_.empty())
      out_ << text;
    else
      write_file(path_, text);
  }
  std::ostream& summary() const { return path_.empty() ? err_ : out_; }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

LinearCode load_code(const std::string& path) {
  std::istringstream is(read_file(path));
  return read_code(is);
}

ArrayFile load_array(const std::string& path) {
  std::istringstream is(read_file(path));
  return read_array(is);
}

FieldTable field_with_coords(int q) {
  auto field = FieldTable::create_order(static_cast<std::uint64_t>(q));
  if (!field.has_coords())
    throw Error("q = " + std::to_string(q) +
                " has no qudit labelling; simulation needs q = d^2 with d prime");
  return field;
}

std::string distance_text(const std::function<std::size_t()>& compute) {
  try {
    return std::to_string(compute());
  } catch (const CapExceeded&) {
    return "?";
  }
}

std::string code_summary(const LinearCode& code) {
  return "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "," +
         distance_text([&] { return min_distance(code); }) + "," +
         distance_text([&] { return dual_distance(code); }) + "]_" +
         std::to_string(code.field().order());
}

std::string oa_summary(const SymbolMatrix& m, int q, std::size_t t, std::uint64_t lambda) {
  return "OA(" + std::to_string(m.cols()) + "," + std::to_string(m.rows()) + "," +
         std::to_string(q) + "," + std::to_string(t) + ") lambda=" + std::to_string(lambda);
}

// Strength from the dual distance unless given explicitly.
std::size_t strength_for(const LinearCode& code, const std::optional<std::size_t>& t) {
  if (t) return *t;
  std::size_t d;
  try {
    d = dual_distance(code);
  } catch (const CapExceeded&) {
    throw Error("dual distance is too costly to compute for this code; pass --t");
  }
  if (d < 2) throw Error("code has dual distance 1, so its array has strength 0");
  return std::min(d - 1, code.length());
}

StrengthCheck require_strength(const SymbolMatrix& m, int q, std::size_t t) {
  auto check = verify_strength(m, q, t);
  if (!check) throw VerificationFailure("strength " + std::to_string(t) + " fails: " +
                                        check.violation->describe());
  return check;
}

EulerianCheck require_eulerian(const SymbolMatrix& m, const FieldTable& field, std::size_t t) {
  auto check = verify_eulerian(m, field, t);
  if (!check) throw VerificationFailure("not Eulerian at t = " + std::to_string(t) + ": " +
                                        check.violation->describe());
  return check;
}

void require_claim(const char* what, std::uint64_t claimed, std::uint64_t counted) {
  if (claimed != counted)
    throw VerificationFailure(std::string("header claims ") + what + " " +
                              std::to_string(claimed) + ", counted " + std::to_string(counted));
}

SymbolMatrix encode_walk(const LinearCode& code, const EulerianCycle& cycle) {
  const int q = code.field().order();
  SymbolMatrix m(code.length(), cycle.length());
  for (std::size_t j = 0; j < cycle.length(); ++j)
    m.set_column(j, code.encode(message_from_index(cycle.vertices[j], code.dimension(), q)));
  return m;
}

SymbolMatrix leading_rows(const SymbolMatrix& m, std::size_t n) {
  if (n == m.rows()) return m;
  SymbolMatrix out(n, m.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < m.cols(); ++j) out(r, j) = m(r, j);
  return out;
}

AveragingMethod method_from(const RunConfig& cfg) {
  if (cfg.method == "exact") return AveragingMethod::exact();
  if (cfg.method == "quadrature") return AveragingMethod::quadrature(cfg.order);
  throw Error("unknown method '" + cfg.method + "' (expected exact or quadrature)");
}

double spectral_norm(const ComplexMatrix& h) {
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// ---- subcommands ------------------------------------------------------------

int code_hamming(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto field = FieldTable::create_order(static_cast<std::uint64_t>(cfg.q));
  auto code = hamming_code(field, cfg.m);
  if (cfg.dual) code = dual_code(code);
  const Sink sink(cfg.out, out, err);
  std::ostringstream os;
  write_code(os, code);
  sink.artifact(os.str());
  sink.summary() << code_summary(code) << "\n";
  return kExitOk;
}

int code_info(const RunConfig& cfg, std::ostream& out) {
  out << code_summary(load_code(cfg.in)) << "\n";
  return kExitOk;
}

int oa_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto code = load_code(cfg.code_path);
  const std::size_t t = strength_for(code, cfg.t);
  const auto entries = codewords(code);
  const int q = code.field().order();
  const auto check = require_strength(entries, q, t);
  const Sink sink(cfg.out, out, err);
  std::ostringstream os;
  write_array(os, entries, q, t, check.lambda);
  sink.artifact(os.str());
  sink.summary() << oa_summary(entries, q, t, check.lambda) << "\n";
  return kExitOk;
}

int oa_verify(const RunConfig& cfg, std::ostream& out) {
  const auto file = load_array(cfg.in);
  const std::size_t t = cfg.t.value_or(file.t);
  const auto check = require_strength(file.entries, file.q, t);
  if (t == file.t) require_claim("lambda", file.lambda, check.lambda);
  out << oa_summary(file.entries, file.q, t, check.lambda) << ": verified\n";
  return kExitOk;
}

int euler_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<LinearCode> code;
  if (!cfg.code_path.empty()) {
    code = load_code(cfg.code_path);
  } else {
    if (cfg.q == 0 || cfg.k == 0) throw Error("pass --code, or --q and --k");
    if (cfg.rows != 0 && cfg.rows != cfg.k)
      throw Error("--rows must equal --k: without a code file the rows are the " +
                  std::string("coordinates of F_q^k (identity generator)"));
    code = identity_code(FieldTable::create_order(static_cast<std::uint64_t>(cfg.q)), cfg.k);
  }
  const auto& field = code->field();
  const std::size_t t = strength_for(*code, cfg.t);
  const auto cycle = euler_cycle_full(field, code->dimension());
  const auto entries = encode_walk(*code, cycle);
  const auto strength = require_strength(entries, field.order(), t);
  const auto euler = require_eulerian(entries, field, t);

  const Sink sink(cfg.out, out, err);
  std::ostringstream os;
  write_array(os, entries, field.order(), t, strength.lambda,
              EulerClaim{t, euler.edge_multiplicity});
  sink.artifact(os.str());
  sink.summary() << "Eulerian " << oa_summary(entries, field.order(), t, strength.lambda)
                 << " edge_multiplicity=" << euler.edge_multiplicity << "\n";
  return kExitOk;
}

int euler_verify(const RunConfig& cfg, std::ostream& out) {
  const auto file = load_array(cfg.in);
  const std::size_t t = cfg.t.value_or(file.euler ? file.euler->t : file.t);
  const auto field = FieldTable::create_order(static_cast<std::uint64_t>(file.q));
  const auto strength = require_strength(file.entries, file.q, t);
  if (t == file.t) require_claim("lambda", file.lambda, strength.lambda);
  const auto euler = require_eulerian(file.entries, field, t);
  if (file.euler && file.euler->t == t)
    require_claim("edge multiplicity", file.euler->edge_multiplicity, euler.edge_multiplicity);

  const std::uint64_t full = [&] {
    std::uint64_t g = 1;
    for (std::size_t i = 0; i < t; ++i) g *= static_cast<std::uint64_t>(file.q);
    return g;
  }();
  const auto n_full = std::count_if(euler.gensets.begin(), euler.gensets.end(),
                                    [&](const auto& s) { return s.generators.size() == full; });
  out << "Eulerian " << oa_summary(file.entries, file.q, t, strength.lambda)
      << " edge_multiplicity=" << euler.edge_multiplicity << " full_generating_sets=" << n_full
      << "/" << euler.gensets.size() << ": verified\n";
  return kExitOk;
}

int schedule_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto file = load_array(cfg.in);
  const std::size_t t = cfg.t.value_or(file.euler ? file.euler->t : file.t);
  const auto field = field_with_coords(file.q);
  require_strength(file.entries, file.q, t);
  require_eulerian(file.entries, field, t);
  const auto schedule = euler_schedule(EulerianOA::verified(file.entries, field, t), cfg.delta);

  double max_norm = 0.0;
  for (const auto& seg : schedule.segments)
    for (const auto& h : seg.hamiltonians) max_norm = std::max(max_norm, spectral_norm(h));

  const Sink sink(cfg.out, out, err);
  sink.artifact(schedule_to_json(schedule) + "\n");
  sink.summary() << "schedule: " << schedule.size() << " segments x " << schedule.n
                 << " channels, delta=" << fmt(schedule.delta)
                 << ", max ||h||=" << fmt(max_norm)
                 << " (bound pi/delta=" << fmt(std::numbers::pi / schedule.delta) << ")\n";
  return kExitOk;
}

int schedule_verify(const RunConfig& cfg, std::ostream& out) {
  const auto schedule = schedule_from_json(read_file(cfg.in));
  if (schedule.mode != ScheduleMode::Eulerian)
    throw Error("only Eulerian schedules carry Hamiltonians to verify");
  const double bound = std::numbers::pi / schedule.delta;
  for (std::size_t j = 0; j < schedule.size(); ++j)
    for (std::size_t k = 0; k < schedule.n; ++k) {
      const auto& h = schedule.segments[j].hamiltonians[k];
      if (!is_hermitian(h))
        throw VerificationFailure("segment " + std::to_string(j) + " channel " +
                                  std::to_string(k) + ": Hamiltonian is not Hermitian");
      if (spectral_norm(h) > bound * (1.0 + 1e-12))
        throw VerificationFailure("segment " + std::to_string(j) + " channel " +
                                  std::to_string(k) + ": ||h|| exceeds pi/delta");
    }
  const double worst = schedule_unitary_error(schedule);
  if (worst > 1e-10)
    throw VerificationFailure("exp(-i h delta) misses its Weyl operator by " + fmt(worst));
  out << "schedule: " << schedule.size() << " segments x " << schedule.n
      << " channels, max unitary error " << fmt(worst) << ": verified\n";
  return kExitOk;
}

int sim(ScheduleMode mode, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto file = load_array(cfg.in);
  const auto field = field_with_coords(file.q);
  const int d = field.coord_dim();

  std::optional<DriftHamiltonian> drift;
  if (!cfg.drift_path.empty()) {
    drift = drift_from_json(read_file(cfg.drift_path));
    drift->validate();
    if (drift->d != d)
      throw Error("drift acts on d = " + std::to_string(drift->d) + " qudits, array gives d = " +
                  std::to_string(d));
  }
  const std::size_t n = cfg.n.value_or(drift ? drift->n : file.rows);
  if (n == 0 || n > file.rows)
    throw Error("--n must be between 1 and the array's " + std::to_string(file.rows) + " rows");
  if (drift && drift->n != n)
    throw Error("drift has " + std::to_string(drift->n) + " qudits, expected " +
                std::to_string(n));
  if (!drift) {
    if (!cfg.t) throw Error("pass --t (drift arity) or --drift");
    if (*cfg.t == 0 || *cfg.t > n) throw Error("--t must be between 1 and n");
    drift = random_drift(n, d, *cfg.t, cfg.env_dim, cfg.seed);
  }

  // Any subset of rows keeps the strength (capped by the row count) and the
  // Eulerian property, so the leading n rows drive an n-qudit register.
  const auto entries = leading_rows(file.entries, n);
  const std::size_t claimed = mode == ScheduleMode::Eulerian && file.euler ? file.euler->t : file.t;
  const std::size_t t = std::min(claimed, n);
  if (t == 0) throw Error("array claims strength 0");
  require_strength(entries, file.q, t);
  const auto method = method_from(cfg);

  AverageReport report;
  if (mode == ScheduleMode::BangBang) {
    report = bangbang_average(OrthogonalArray::verified(entries, file.q, t), field, *drift);
  } else {
    require_eulerian(entries, field, t);
    report = eulerian_average(EulerianOA::verified(entries, field, t), *drift, cfg.delta, method);
  }

  std::optional<ConvergenceSweep> sweep;
  if (cfg.sweep_levels > 0) {
    if (cfg.sweep_levels < 2) throw Error("--sweep-tc needs at least 2 cycle times");
    // Default base step keeps T_c ||H|| small enough for the second-order
    // term to dominate the error.
    const double base = cfg.sweep_delta.value_or(
        0.5 / (static_cast<double>(entries.cols()) * std::max(spectral_norm(drift->total()), 1e-12)));
    sweep = convergence_sweep(*drift, entries, field, mode, base, cfg.sweep_levels);
  }

  const Sink sink(cfg.out, out, err);
  sink.artifact(report_to_json(report, cfg.tolerance, sweep) + "\n");
  const bool pass = report.residual_norm <= cfg.tolerance;
  auto& s = sink.summary();
  s << to_string(mode) << ": residual " << fmt(report.residual_norm)
    << (pass ? " <= " : " > ") << fmt(cfg.tolerance) << ", env_error " << fmt(report.env_error);
  if (!report.strength_sufficient)
    s << ", drift arity " << report.max_arity << " exceeds strength " << report.strength;
  if (sweep) s << ", convergence slope " << fmt(sweep->slope);
  s << (pass ? ": PASS\n" : ": FAIL\n");
  return pass ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian orthogonal arrays and bounded-strength decoupling schedules", "eoa"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success, 1 verification or tolerance failure, 2 bad usage or input.\n"
      "EOA_THREADS caps the worker thread count.");
  RunConfig cfg;

  auto* code = app.add_subcommand("code", "Hamming codes and code properties")->require_subcommand(1);
  auto* hamming = code->add_subcommand("hamming", "write a q-ary Hamming code (or its dual)");
  hamming->add_option("--q", cfg.q, "field order")->required();
  hamming->add_option("--m", cfg.m, "redundancy, n = (q^m - 1)/(q - 1)")->required();
  hamming->add_flag("--dual", cfg.dual, "write the dual code instead");
  hamming->add_option("--out", cfg.out, "code file (stdout when omitted)");
  auto* info = code->add_subcommand("info", "print [n,k,d_min,d_dual]_q of a code file");
  info->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile);

  auto* oa = app.add_subcommand("oa", "orthogonal arrays from codes")->require_subcommand(1);
  auto* oa_b = oa->add_subcommand("build", "codewords of a code as array columns");
  oa_b->add_option("--code", cfg.code_path)->required()->check(CLI::ExistingFile);
  oa_b->add_option("--t", cfg.t, "strength (default: dual distance - 1)");
  oa_b->add_option("--out", cfg.out, "array file (stdout when omitted)");
  auto* oa_v = oa->add_subcommand("verify", "recount the strength of an array file");
  oa_v->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile);
  oa_v->add_option("--t", cfg.t, "strength to check (default: header)");

  auto* euler = app.add_subcommand("euler", "Eulerian orthogonal arrays")->require_subcommand(1);
  auto* eu_b = euler->add_subcommand("build", "encode an Euler cycle of F_q^k through a code");
  auto* eu_code = eu_b->add_option("--code", cfg.code_path)->check(CLI::ExistingFile);
  eu_b->add_option("--q", cfg.q, "field order (identity code)")->excludes(eu_code);
  eu_b->add_option("--k", cfg.k, "message length (identity code)")->excludes(eu_code);
  eu_b->add_option("--rows", cfg.rows, "array rows; must equal --k")->excludes(eu_code);
  eu_b->add_option("--t", cfg.t, "strength (default: dual distance - 1)");
  eu_b->add_option("--out", cfg.out, "array file (stdout when omitted)");
  auto* eu_v = euler->add_subcommand("verify", "recount strength and Euler transitions");
  eu_v->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile);
  eu_v->add_option("--t", cfg.t, "strength to check (default: EULER line or header)");

  auto* sched = app.add_subcommand("schedule", "bounded-control schedules")->require_subcommand(1);
  auto* sc_e = sched->add_subcommand("export", "Hamiltonians for an Eulerian array as JSON");
  sc_e->add_option("--oa", cfg.in)->required()->check(CLI::ExistingFile);
  sc_e->add_option("--delta", cfg.delta, "segment length")->check(CLI::PositiveNumber);
  sc_e->add_option("--t", cfg.t, "strength (default: EULER line or header)");
  sc_e->add_option("--out", cfg.out, "schedule JSON (stdout when omitted)");
  auto* sc_v = sched->add_subcommand("verify", "re-check an exported schedule");
  sc_v->add_option("--in", cfg.in)->required()->check(CLI::ExistingFile);

  auto* simulate = app.add_subcommand("sim", "first-order average Hamiltonian")->require_subcommand(1);
  std::vector<CLI::App*> sims;
  for (const char* mode : {"bangbang", "eulerian"}) {
    auto* s = simulate->add_subcommand(mode, std::string(mode) + " decoupling of a drift");
    s->add_option("--oa", cfg.in, "array file")->required()->check(CLI::ExistingFile);
    s->add_option("--n", cfg.n, "qudits (leading array rows; default: all)");
    s->add_option("--t", cfg.t, "arity of the random drift");
    s->add_option("--seed", cfg.seed, "drift seed");
    s->add_option("--denv", cfg.env_dim, "environment dimension")->check(CLI::PositiveNumber);
    s->add_option("--drift", cfg.drift_path, "drift JSON instead of a random drift")
        ->check(CLI::ExistingFile);
    s->add_option("--delta", cfg.delta, "segment length")->check(CLI::PositiveNumber);
    s->add_option("--method", cfg.method, "segment integral: exact or quadrature")
        ->check(CLI::IsMember({"exact", "quadrature"}));
    s->add_option("--order", cfg.order, "Gauss-Legendre nodes")->check(CLI::Range(1, 200));
    s->add_option("--sweep-tc", cfg.sweep_levels, "convergence sweep over this many cycle times")
        ->check(CLI::Range(2, 12));
    s->add_option("--sweep-delta", cfg.sweep_delta, "largest sweep segment length")
        ->check(CLI::PositiveNumber);
    s->add_option("--tol", cfg.tolerance, "residual tolerance")->check(CLI::NonNegativeNumber);
    s->add_option("--out", cfg.out, "report JSON (stdout when omitted)");
    sims.push_back(s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hamming) return code_hamming(cfg, out, err);
    if (*info) return code_info(cfg, out);
    if (*oa_b) return oa_build(cfg, out, err);
    if (*oa_v) return oa_verify(cfg, out);
    if (*eu_b) return euler_build(cfg, out, err);
    if (*eu_v) return euler_verify(cfg, out);
    if (*sc_e) return schedule_export(cfg, out, err);
    if (*sc_v) return schedule_verify(cfg, out);
    if (*sims[0]) return sim(ScheduleMode::BangBang, cfg, out, err);
    if (*sims[1]) return sim(ScheduleMode::Eulerian, cfg, out, err);
  } catch (const VerificationFailure& e) {
    err << "FAIL: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace eoa::cli
