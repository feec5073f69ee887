#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eoa/finite_field.hpp"
#include "eoa/tolerances.hpp"

namespace eoa {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Element (a, b) of Z_d x Z_d.
struct GroupLabel {
  int a = 0;
  int b = 0;

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

// Frobenius-norm predicates; the tolerance is scaled by the dimension.
bool is_unitary(const ComplexMatrix& u, double eps = kTolerances.matrix);
bool is_hermitian(const ComplexMatrix& h, double eps = kTolerances.matrix);
bool is_traceless(const ComplexMatrix& x, double eps = kTolerances.matrix);

// Minimum over global phases of ||e^{i phi} U - V||_F.
double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// S = sum_k |k><k+1| (indices mod d) and T = diag(omega^k), omega = e^{2 pi i/d}.
std::pair<ComplexMatrix, ComplexMatrix> shift_clock(int d);

// U_(a,b) = S^a T^b. Phases of products are never normalized.
ComplexMatrix weyl(int d, GroupLabel label);

// Weyl operator for a GF(d^2) symbol through FieldTable::coords.
ComplexMatrix weyl_from_field(const FieldTable& field, Symbol elem);

// (1/d^2) sum_g U_g^dag X U_g, summed in label order (a major, b minor).
ComplexMatrix group_average(int d, const ComplexMatrix& x);

// Places X (acting on (C^d)^{t}) on the qudits listed in `support`
// (0-based, strictly increasing, < n) of (C^d)^{n}; identity elsewhere.
// Qudit 0 is the most significant tensor factor.
ComplexMatrix embed(const ComplexMatrix& x, std::span<const std::size_t> support,
                    std::size_t n, int d);

}  // namespace eoa
