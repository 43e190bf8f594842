#include "grhom/dense.hpp"

#include <algorithm>

#include "grhom/errors.hpp"

namespace grhom {

DenseMatrix DenseMatrix::identity(index n) {
  DenseMatrix m(n, n);
  for (index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](coeff c) { return c == 0; });
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& field) {
  if (a.cols() != b.rows()) throw DimensionMismatch("dense multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (index i = 0; i < a.rows(); ++i) {
    for (index k = 0; k < a.cols(); ++k) {
      const coeff aik = a(i, k);
      if (aik == 0) continue;
      for (index j = 0; j < b.cols(); ++j) {
        c(i, j) = field.add(c(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

SparseColumn dense_column(const DenseMatrix& a, index j) {
  SparseColumn out;
  for (index i = 0; i < a.rows(); ++i) {
    if (a(i, j) != 0) out.push_back({i, a(i, j)});
  }
  return out;
}

}  // namespace grhom
