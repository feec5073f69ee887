#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eoa {

// A field element, stored as its table index. Index digits in base p are the
// polynomial coefficients in ascending order.
using Symbol = std::uint8_t;

// Dense row-major matrix of field symbols. Used both for generator matrices
// (n x k) and for arrays (n rows = qudits, N columns = time slots).
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(std::size_t rows, std::size_t cols, Symbol fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::vector<Symbol> column(std::size_t c) const {
    std::vector<Symbol> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void set_column(std::size_t c, std::span<const Symbol> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  // Keeps column order[j] of *this as column j of the result.
  SymbolMatrix permute_columns(std::span<const std::size_t> order) const {
    SymbolMatrix out(rows_, order.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < order.size(); ++j) out(r, j) = (*this)(r, order[j]);
    return out;
  }

  const std::vector<Symbol>& data() const { return data_; }

  friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

}  // namespace eoa
