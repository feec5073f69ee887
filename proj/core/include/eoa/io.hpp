#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "eoa/averaging.hpp"
#include "eoa/cayley_euler.hpp"
#include "eoa/drift.hpp"
#include "eoa/evolution.hpp"
#include "eoa/linear_code.hpp"
#include "eoa/orthogonal_array.hpp"
#include "eoa/schedule.hpp"

// File formats. Symbols are decimal field indices 0..q-1 throughout.
//
//   code file:   CODE q n k            then n lines of k symbols (the n x k
//                                      generator; codewords are G m)
//   array file:  OA N n q t lambda     then n lines of N symbols
//                [EULER t lambda_edge] trailing line for Eulerian arrays
//
// Schedules, drifts and reports are JSON; matrices are lists of rows of
// [re, im] pairs.
namespace eoa {

void write_code(std::ostream& os, const LinearCode& code);
LinearCode read_code(std::istream& is);

struct EulerClaim {
  std::size_t t = 0;
  std::uint64_t edge_multiplicity = 0;
};

// Header values are claims; callers re-verify the entries.
struct ArrayFile {
  std::size_t runs = 0;
  std::size_t rows = 0;
  int q = 0;
  std::size_t t = 0;
  std::uint64_t lambda = 0;
  SymbolMatrix entries;
  std::optional<EulerClaim> euler;
};

void write_array(std::ostream& os, const SymbolMatrix& entries, int q, std::size_t t,
                 std::uint64_t lambda, std::optional<EulerClaim> euler = std::nullopt);
void write_array(std::ostream& os, const OrthogonalArray& oa);
void write_array(std::ostream& os, const EulerianOA& array);
ArrayFile read_array(std::istream& is);

std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const std::string& text);

std::string drift_to_json(const DriftHamiltonian& h);
DriftHamiltonian drift_from_json(const std::string& text);

std::string report_to_json(const AverageReport& report, double tolerance,
                           const std::optional<ConvergenceSweep>& sweep = std::nullopt);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace eoa
