#pragma once

#include <cstdint>

namespace eoa {

// Every numeric tolerance and size cap used by the library lives here.
struct Tolerances {
  // Matrix predicates (unitary, hermitian, traceless) scale this by dimension.
  double matrix = 1e-12;
  // Default acceptance bound for a first-order average residual.
  double residual = 1e-9;
  // Below this |mu * delta| the segment kernel switches to its Taylor series.
  double kernel_series = 1e-5;
};

struct Caps {
  std::uint64_t field_order = 256;
  std::uint64_t code_length = 4096;
  std::uint64_t enumeration = std::uint64_t{1} << 20;
  std::uint64_t cycle_length = std::uint64_t{1} << 20;
  std::uint64_t dense_dimension = 256;
};

inline constexpr Tolerances kTolerances{};
inline constexpr Caps kCaps{};

}  // namespace eoa
