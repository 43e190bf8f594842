#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grhom/degree.hpp"
#include "grhom/field.hpp"
#include "grhom/sparse.hpp"

namespace grhom {

/**
 * @brief Sparse matrix over GF(p) whose rows and columns carry degrees in Z^d.
 *
 * Represents a map A[cols] -> A[rows] of free graded modules. The grading
 * constraint (entry (i,j) nonzero only if rows[i] <= cols[j]) is enforced by
 * the constructor, as are canonical columns and matching dimensions.
 */
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(PrimeField field, std::size_t d, std::vector<Degree> rows,
               std::vector<Degree> cols, std::vector<SparseColumn> columns);

  /// Matrix with the given decorations and no entries.
  static GradedMatrix zero(PrimeField field, std::size_t d, std::vector<Degree> rows,
                           std::vector<Degree> cols);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return d_; }
  index num_rows() const noexcept { return static_cast<index>(rows_.size()); }
  index num_cols() const noexcept { return static_cast<index>(cols_.size()); }
  const std::vector<Degree>& row_degrees() const noexcept { return rows_; }
  const std::vector<Degree>& col_degrees() const noexcept { return cols_; }
  const std::vector<SparseColumn>& columns() const noexcept { return columns_; }
  const SparseColumn& column(index j) const { return columns_[j]; }
  const Degree& row_degree(index i) const { return rows_[i]; }
  const Degree& col_degree(index j) const { return cols_[j]; }

  coeff at(index i, index j) const { return value_at(columns_[j], i); }
  std::size_t nnz() const;
  bool empty_entries() const { return nnz() == 0; }

  /// Rows as sparse vectors over column indices.
  std::vector<SparseColumn> row_view() const;

  bool operator==(const GradedMatrix&) const = default;

 private:
  PrimeField field_{};
  std::size_t d_ = 0;
  std::vector<Degree> rows_;
  std::vector<Degree> cols_;
  std::vector<SparseColumn> columns_;
};

/// True iff every stored entry satisfies rows[i] <= cols[j]. Pure predicate.
bool validate_grading(std::span<const Degree> rows, std::span<const Degree> cols,
                      std::span<const SparseColumn> columns);
bool validate_grading(const GradedMatrix& m);

struct Submatrix {
  GradedMatrix matrix;
  std::vector<index> row_map;  ///< local row -> original row
  std::vector<index> col_map;  ///< local col -> original col
};

/// Rows and columns of degree <= alpha, original order kept.
Submatrix submatrix_at_most(const GradedMatrix& m, const Degree& alpha);

/// Plain transpose; row and column decorations swap. Only valid as a graded
/// matrix after a compatible regrading, so it is exposed for ungraded use.
std::vector<SparseColumn> transpose_columns(const GradedMatrix& m);

/// Horizontal concatenation [a b] (same rows).
GradedMatrix hconcat(const GradedMatrix& a, const GradedMatrix& b);

/// Product a * b as graded matrices (b's rows must equal a's columns).
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace grhom
