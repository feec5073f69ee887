#include "eoa/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eoa/error.hpp"

namespace eoa {
namespace {

using nlohmann::json;

std::string next_nonempty_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return {};
}

std::vector<long long> parse_numbers(const std::string& line, const std::string& what) {
  std::istringstream ls(line);
  std::vector<long long> out;
  std::string token;
  while (ls >> token) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error("non-numeric token '" + token + "' in " + what);
    }
  }
  return out;
}

void read_symbol_rows(std::istream& is, SymbolMatrix& m, int q, const std::string& what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto line = next_nonempty_line(is);
    if (line.empty()) throw Error(what + ": expected " + std::to_string(m.rows()) + " rows");
    const auto values = parse_numbers(line, what);
    if (values.size() != m.cols())
      throw Error(what + ": row " + std::to_string(r) + " has " + std::to_string(values.size()) +
                  " symbols, expected " + std::to_string(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (values[c] < 0 || values[c] >= q)
        throw Error(what + ": symbol " + std::to_string(values[c]) + " outside 0.." +
                    std::to_string(q - 1));
      m(r, c) = static_cast<Symbol>(values[c]);
    }
  }
}

void write_rows(std::ostream& os, const SymbolMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << int(m(r, c));
    os << '\n';
  }
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_parse(const json& j) {
  if (!j.is_array()) throw Error("matrix must be a JSON array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) throw Error("matrix has no rows");
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2) throw Error("matrix entries are [re, im] pairs");
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

template <typename Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(std::string("bad JSON field: ") + e.what());
  }
}

}  // namespace

void write_code(std::ostream& os, const LinearCode& code) {
  os << "CODE " << code.field().order() << ' ' << code.length() << ' ' << code.dimension() << '\n';
  write_rows(os, code.generator());
}

LinearCode read_code(std::istream& is) {
  const auto header = next_nonempty_line(is);
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "CODE") throw Error("code file must start with 'CODE q n k'");
  std::string rest;
  std::getline(hs, rest);
  const auto values = parse_numbers(rest, "CODE header");
  if (values.size() != 3 || values[0] < 2 || values[1] < 1 || values[2] < 1)
    throw Error("CODE header needs q >= 2, n >= 1, k >= 1");
  if (values[1] > static_cast<long long>(kCaps.code_length) || values[2] > values[1])
    throw Error("CODE header needs k <= n <= " + std::to_string(kCaps.code_length));
  const auto field = FieldTable::create_order(static_cast<std::uint64_t>(values[0]));
  SymbolMatrix g(static_cast<std::size_t>(values[1]), static_cast<std::size_t>(values[2]));
  read_symbol_rows(is, g, field.order(), "code file");
  return LinearCode(field, std::move(g));
}

void write_array(std::ostream& os, const SymbolMatrix& entries, int q, std::size_t t,
                 std::uint64_t lambda, std::optional<EulerClaim> euler) {
  os << "OA " << entries.cols() << ' ' << entries.rows() << ' ' << q << ' ' << t << ' ' << lambda
     << '\n';
  write_rows(os, entries);
  if (euler) os << "EULER " << euler->t << ' ' << euler->edge_multiplicity << '\n';
}

void write_array(std::ostream& os, const OrthogonalArray& oa) {
  write_array(os, oa.entries(), oa.levels(), oa.strength(), oa.lambda());
}

void write_array(std::ostream& os, const EulerianOA& array) {
  const auto& oa = array.array();
  write_array(os, oa.entries(), oa.levels(), oa.strength(), oa.lambda(),
              EulerClaim{array.strength(), array.edge_multiplicity()});
}

ArrayFile read_array(std::istream& is) {
  const auto header = next_nonempty_line(is);
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "OA") throw Error("array file must start with 'OA N n q t lambda'");
  std::string rest;
  std::getline(hs, rest);
  const auto v = parse_numbers(rest, "OA header");
  if (v.size() != 5 || v[0] < 1 || v[1] < 1 || v[2] < 2 || v[3] < 0 || v[4] < 0)
    throw Error("OA header needs N >= 1, n >= 1, q >= 2, t >= 0, lambda >= 0");
  if (v[2] > 256) throw Error("OA header q exceeds 256");
  if (v[1] > static_cast<long long>(kCaps.code_length) ||
      v[0] > static_cast<long long>(kCaps.enumeration))
    throw Error("OA header exceeds " + std::to_string(kCaps.code_length) + " rows or " +
                std::to_string(kCaps.enumeration) + " runs");

  ArrayFile f;
  f.runs = static_cast<std::size_t>(v[0]);
  f.rows = static_cast<std::size_t>(v[1]);
  f.q = static_cast<int>(v[2]);
  f.t = static_cast<std::size_t>(v[3]);
  f.lambda = static_cast<std::uint64_t>(v[4]);
  f.entries = SymbolMatrix(f.rows, f.runs);
  read_symbol_rows(is, f.entries, f.q, "array file");

  const auto trailer = next_nonempty_line(is);
  if (!trailer.empty()) {
    std::istringstream ts(trailer);
    ts >> tag;
    if (tag != "EULER") throw Error("unexpected trailing line in array file: " + trailer);
    std::getline(ts, rest);
    const auto e = parse_numbers(rest, "EULER trailer");
    if (e.size() != 2 || e[0] < 1 || e[1] < 0) throw Error("EULER trailer needs t >= 1, lambda_edge");
    f.euler = EulerClaim{static_cast<std::size_t>(e[0]), static_cast<std::uint64_t>(e[1])};
    if (!next_nonempty_line(is).empty()) throw Error("content after EULER trailer");
  }
  return f;
}

std::string matrix_to_json(const ComplexMatrix& m) { return matrix_json(m).dump(); }

ComplexMatrix matrix_from_json(const std::string& text) {
  return with_json_errors([&] { return matrix_parse(parse_json(text)); });
}

std::string schedule_to_json(const Schedule& s) {
  json segments = json::array();
  for (const auto& seg : s.segments) {
    json labels = json::array();
    for (const auto& l : seg.labels) labels.push_back({l.a, l.b});
    json hams = json::array();
    for (const auto& h : seg.hamiltonians) hams.push_back(matrix_json(h));
    segments.push_back({{"labels", std::move(labels)}, {"hamiltonians", std::move(hams)}});
  }
  json j{{"n", s.n},
         {"d", s.d},
         {"N", s.size()},
         {"delta", s.delta},
         {"mode", to_string(s.mode)},
         {"segments", std::move(segments)}};
  return j.dump();
}

Schedule schedule_from_json(const std::string& text) {
  return with_json_errors([&] {
    const json j = parse_json(text);
    Schedule s;
    s.n = j.at("n").get<std::size_t>();
    s.d = j.at("d").get<int>();
    s.delta = j.at("delta").get<double>();
    s.mode = schedule_mode_from_string(j.at("mode").get<std::string>());
    const auto& segs = j.at("segments");
    if (segs.size() != j.at("N").get<std::size_t>()) throw Error("schedule N disagrees with segments");
    for (const auto& js : segs) {
      Segment seg;
      for (const auto& l : js.at("labels")) {
        GroupLabel label{l.at(0).get<int>(), l.at(1).get<int>()};
        if (label.a < 0 || label.a >= s.d || label.b < 0 || label.b >= s.d)
          throw Error("schedule label outside Z_d x Z_d");
        seg.labels.push_back(label);
      }
      for (const auto& h : js.at("hamiltonians")) seg.hamiltonians.push_back(matrix_parse(h));
      if (seg.labels.size() != s.n) throw Error("segment label count differs from n");
      if (s.mode == ScheduleMode::Eulerian) {
        if (seg.hamiltonians.size() != s.n) throw Error("segment needs one Hamiltonian per qudit");
        for (const auto& h : seg.hamiltonians)
          if (h.rows() != s.d || h.cols() != s.d || !is_hermitian(h, 1e-9))
            throw Error("segment Hamiltonians must be Hermitian d x d");
      }
      s.segments.push_back(std::move(seg));
    }
    return s;
  });
}

std::string drift_to_json(const DriftHamiltonian& h) {
  json terms = json::array();
  for (const auto& t : h.terms)
    terms.push_back({{"support", t.support},
                     {"sys", matrix_json(t.sys_block)},
                     {"env", matrix_json(t.env_block)}});
  json j{{"n", h.n},
         {"d", h.d},
         {"env_dim", h.env_dim},
         {"terms", std::move(terms)},
         {"env_only", matrix_json(h.env_only)}};
  return j.dump();
}

DriftHamiltonian drift_from_json(const std::string& text) {
  return with_json_errors([&] {
    const json j = parse_json(text);
    DriftHamiltonian h;
    h.n = j.at("n").get<std::size_t>();
    h.d = j.at("d").get<int>();
    h.env_dim = j.value("env_dim", 1);
    for (const auto& jt : j.at("terms")) {
      DriftTerm t;
      t.support = jt.at("support").get<std::vector<std::size_t>>();
      t.sys_block = matrix_parse(jt.at("sys"));
      t.env_block = jt.contains("env") ? matrix_parse(jt.at("env"))
                                       : ComplexMatrix::Identity(h.env_dim, h.env_dim);
      h.terms.push_back(std::move(t));
    }
    h.env_only = j.contains("env_only") ? matrix_parse(j.at("env_only"))
                                        : ComplexMatrix::Zero(h.env_dim, h.env_dim);
    h.validate();
    return h;
  });
}

std::string report_to_json(const AverageReport& r, double tolerance,
                           const std::optional<ConvergenceSweep>& sweep) {
  json j{{"mode", to_string(r.mode)},
         {"method", r.method.name()},
         {"quadrature_order", r.method.kind == AveragingMethod::Kind::Quadrature ? r.method.order : 0},
         {"segments", r.segments},
         {"strength", r.strength},
         {"max_arity", r.max_arity},
         {"strength_sufficient", r.strength_sufficient},
         {"residual_norm", r.residual_norm},
         {"env_error", r.env_error},
         {"per_term_norms", r.per_term_norms},
         {"tolerance", tolerance},
         {"pass", r.residual_norm <= tolerance}};
  if (sweep) {
    j["convergence"] = {{"cycle_times", sweep->cycle_times},
                        {"errors", sweep->errors},
                        {"slope", sweep->slope}};
  }
  return j.dump(2);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace eoa
