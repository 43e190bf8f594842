#pragma once

#include <string>
#include <vector>

#include "grhom/graded_matrix.hpp"

namespace grhom {

/**
 * @brief A graded matrix M: A[R] -> A[G] presenting X = coker M.
 *
 * Rows are generators, columns are relations. The minimal flag is set only by
 * operations that guarantee minimality (minimize, sparsify, truncate, ...).
 */
struct Presentation {
  GradedMatrix matrix;
  bool minimal = false;
  std::string label;

  Presentation() = default;
  explicit Presentation(GradedMatrix m, bool is_minimal = false, std::string name = {})
      : matrix(std::move(m)), minimal(is_minimal), label(std::move(name)) {}

  static Presentation zero(PrimeField field, std::size_t d);
  static Presentation free(PrimeField field, std::size_t d, std::vector<Degree> generators);

  const PrimeField& field() const noexcept { return matrix.field(); }
  std::size_t dim() const noexcept { return matrix.dim(); }
  index num_generators() const noexcept { return matrix.num_rows(); }
  index num_relations() const noexcept { return matrix.num_cols(); }
  const std::vector<Degree>& generators() const noexcept { return matrix.row_degrees(); }
  const std::vector<Degree>& relations() const noexcept { return matrix.col_degrees(); }
};

/// d_1, d_2, ... with rows of d_{k+1} equal to the columns of d_k and d_k d_{k+1} = 0.
struct Resolution {
  std::vector<GradedMatrix> maps;

  std::size_t length() const noexcept { return maps.size(); }
  bool empty() const noexcept { return maps.empty(); }
};

}  // namespace grhom
