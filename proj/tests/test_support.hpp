#pragma once

#include "eoa/cayley_euler.hpp"
#include "eoa/linear_code.hpp"
#include "eoa/orthogonal_array.hpp"

namespace eoa::testing {

inline const FieldTable& gf4() {
  static const auto f = FieldTable::create(2, 2);
  return f;
}

// [5,2]_4 dual of the GF(4) Hamming code.
inline const LinearCode& dual_hamming_5_2() {
  static const auto c = dual_code(hamming_code(gf4(), 2));
  return c;
}

inline const OrthogonalArray& oa16() {
  static const auto oa = oa_from_code(dual_hamming_5_2(), 3);
  return oa;
}

inline const EulerianOA& eoa256() {
  static const auto a =
      eulerian_oa_from_code(dual_hamming_5_2(), euler_cycle_full(gf4(), 2), 2);
  return a;
}

}  // namespace eoa::testing
