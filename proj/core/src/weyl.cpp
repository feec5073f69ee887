#include "eoa/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eoa/error.hpp"

namespace eoa {

bool is_unitary(const ComplexMatrix& u, double eps) {
  if (u.rows() != u.cols()) return false;
  const auto dim = static_cast<double>(u.rows());
  return (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() <= eps * dim;
}

bool is_hermitian(const ComplexMatrix& h, double eps) {
  if (h.rows() != h.cols()) return false;
  return (h - h.adjoint()).norm() <= eps * static_cast<double>(h.rows());
}

bool is_traceless(const ComplexMatrix& x, double eps) {
  return std::abs(x.trace()) <= eps * static_cast<double>(x.rows());
}

double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  // ||e^{i phi} U - V||^2 = ||U||^2 + ||V||^2 - 2 Re(e^{-i phi} tr(U^dag V)),
  // minimized when the phase aligns with tr(U^dag V).
  const double sq = u.squaredNorm() + v.squaredNorm() - 2.0 * std::abs((u.adjoint() * v).trace());
  return std::sqrt(std::max(0.0, sq));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> shift_clock(int d) {
  if (d < 2) throw Error("local dimension must be >= 2, got " + std::to_string(d));
  ComplexMatrix s = ComplexMatrix::Zero(d, d);
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    s(k, (k + 1) % d) = 1.0;
    t(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
  }
  return {s, t};
}

ComplexMatrix weyl(int d, GroupLabel label) {
  if (label.a < 0 || label.a >= d || label.b < 0 || label.b >= d)
    throw Error("group label (" + std::to_string(label.a) + "," + std::to_string(label.b) +
                ") outside Z_" + std::to_string(d) + " x Z_" + std::to_string(d));
  // S^a T^b has entry (k, k+a) = omega^{(k+a) b}.
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const int col = (k + label.a) % d;
    u(k, col) = std::polar(1.0, 2.0 * std::numbers::pi * ((col * label.b) % d) / d);
  }
  return u;
}

ComplexMatrix weyl_from_field(const FieldTable& field, Symbol elem) {
  const auto c = field.coords(elem);
  return weyl(field.coord_dim(), GroupLabel{c.a, c.b});
}

ComplexMatrix group_average(int d, const ComplexMatrix& x) {
  if (x.rows() != d || x.cols() != d)
    throw Error("group_average expects a " + std::to_string(d) + "x" + std::to_string(d) +
                " matrix");
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const ComplexMatrix u = weyl(d, {a, b});
      acc += u.adjoint() * x * u;
    }
  return acc / static_cast<double>(d * d);
}

ComplexMatrix embed(const ComplexMatrix& x, std::span<const std::size_t> support,
                    std::size_t n, int d) {
  const std::size_t t = support.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (support[i] >= n || (i > 0 && support[i] <= support[i - 1]))
      throw Error("support must be strictly increasing qudit indices below n");
  }
  Eigen::Index sub = 1;
  for (std::size_t i = 0; i < t; ++i) sub *= d;
  if (x.rows() != sub || x.cols() != sub)
    throw Error("embedded operator has dimension " + std::to_string(x.rows()) + ", expected " +
                std::to_string(sub));

  Eigen::Index full = 1;
  for (std::size_t i = 0; i < n; ++i) full *= d;

  // Stride (place value) of each qudit in the full index.
  std::vector<Eigen::Index> stride(n);
  Eigen::Index place = 1;
  for (std::size_t q = n; q-- > 0;) {
    stride[q] = place;
    place *= d;
  }
  std::vector<bool> on_support(n, false);
  for (auto k : support) on_support[k] = true;

  // Offsets contributed by each sub-index of X.
  std::vector<Eigen::Index> sub_offset(static_cast<std::size_t>(sub));
  for (Eigen::Index s = 0; s < sub; ++s) {
    Eigen::Index rest = s, off = 0;
    for (std::size_t i = t; i-- > 0;) {
      off += (rest % d) * stride[support[i]];
      rest /= d;
    }
    sub_offset[static_cast<std::size_t>(s)] = off;
  }
  // Offsets of every assignment of the qudits off the support.
  std::vector<Eigen::Index> env_offset{0};
  for (std::size_t q = 0; q < n; ++q) {
    if (on_support[q]) continue;
    std::vector<Eigen::Index> next;
    next.reserve(env_offset.size() * static_cast<std::size_t>(d));
    for (auto base : env_offset)
      for (int v = 0; v < d; ++v) next.push_back(base + v * stride[q]);
    env_offset = std::move(next);
  }

  ComplexMatrix out = ComplexMatrix::Zero(full, full);
  for (auto base : env_offset)
    for (Eigen::Index r = 0; r < sub; ++r)
      for (Eigen::Index c = 0; c < sub; ++c)
        out(base + sub_offset[static_cast<std::size_t>(r)],
            base + sub_offset[static_cast<std::size_t>(c)]) = x(r, c);
  return out;
}

}  // namespace eoa
