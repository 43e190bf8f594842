#pragma once

#include <cstddef>
#include <vector>

#include "grhom/field.hpp"
#include "grhom/sparse.hpp"

namespace grhom {

/// Small row-major matrix over GF(p), used for local maps Y_a -> Y_b.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(index rows, index cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  static DenseMatrix identity(index n);

  index rows() const noexcept { return rows_; }
  index cols() const noexcept { return cols_; }
  coeff& operator()(index i, index j) { return data_[std::size_t(i) * cols_ + j]; }
  coeff operator()(index i, index j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const DenseMatrix&) const = default;

 private:
  index rows_ = 0;
  index cols_ = 0;
  std::vector<coeff> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& field);

/// Column j of the result as a sparse column.
SparseColumn dense_column(const DenseMatrix& a, index j);

}  // namespace grhom
