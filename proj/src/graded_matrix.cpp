#include "grhom/graded_matrix.hpp"

#include <map>

#include "grhom/errors.hpp"

namespace grhom {

namespace {

void require_dims(std::size_t d, const std::vector<Degree>& degrees, const char* what) {
  for (const auto& g : degrees) {
    if (g.dim() != d) {
      throw DimensionMismatch(std::string(what) + " degree " + to_string(g) +
                              " does not have dimension " + std::to_string(d));
    }
  }
}

}  // namespace

GradedMatrix::GradedMatrix(PrimeField field, std::size_t d, std::vector<Degree> rows,
                           std::vector<Degree> cols, std::vector<SparseColumn> columns)
    : field_(field), d_(d), rows_(std::move(rows)), cols_(std::move(cols)), columns_(std::move(columns)) {
  require_dims(d_, rows_, "row");
  require_dims(d_, cols_, "column");
  if (columns_.size() != cols_.size()) {
    throw PreconditionError("graded matrix: " + std::to_string(columns_.size()) +
                            " columns for " + std::to_string(cols_.size()) + " column degrees");
  }
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (!is_canonical(columns_[j], field_)) {
      throw PreconditionError("graded matrix: column " + std::to_string(j) +
                              " is not sorted, has zeros or coefficients >= p");
    }
    if (!columns_[j].empty() && columns_[j].back().row >= num_rows()) {
      throw PreconditionError("graded matrix: row index out of range in column " +
                              std::to_string(j));
    }
  }
  if (!validate_grading(rows_, cols_, columns_)) {
    throw GradingError("graded matrix: nonzero entry at a row whose degree is not below its column");
  }
}

GradedMatrix GradedMatrix::zero(PrimeField field, std::size_t d, std::vector<Degree> rows,
                                std::vector<Degree> cols) {
  std::vector<SparseColumn> columns(cols.size());
  return GradedMatrix(field, d, std::move(rows), std::move(cols), std::move(columns));
}

std::size_t GradedMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::vector<SparseColumn> GradedMatrix::row_view() const {
  std::vector<SparseColumn> rows(rows_.size());
  for (index j = 0; j < num_cols(); ++j) {
    for (const auto& e : columns_[j]) rows[e.row].push_back({j, e.value});
  }
  return rows;
}

bool validate_grading(std::span<const Degree> rows, std::span<const Degree> cols,
                      std::span<const SparseColumn> columns) {
  if (columns.size() != cols.size()) return false;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& e : columns[j]) {
      if (e.row < 0 || static_cast<std::size_t>(e.row) >= rows.size()) return false;
      if (e.value == 0) continue;
      if (!leq(rows[e.row], cols[j])) return false;
    }
  }
  return true;
}

bool validate_grading(const GradedMatrix& m) {
  return validate_grading(m.row_degrees(), m.col_degrees(), m.columns());
}

Submatrix submatrix_at_most(const GradedMatrix& m, const Degree& alpha) {
  if (alpha.dim() != m.dim()) {
    throw DimensionMismatch("submatrix_at_most: degree " + to_string(alpha) +
                            " has the wrong dimension");
  }
  Submatrix out;
  std::vector<index> local(m.num_rows(), -1);
  std::vector<Degree> rows;
  for (index i = 0; i < m.num_rows(); ++i) {
    if (leq(m.row_degree(i), alpha)) {
      local[i] = static_cast<index>(out.row_map.size());
      out.row_map.push_back(i);
      rows.push_back(m.row_degree(i));
    }
  }
  std::vector<Degree> cols;
  std::vector<SparseColumn> columns;
  for (index j = 0; j < m.num_cols(); ++j) {
    if (!leq(m.col_degree(j), alpha)) continue;
    out.col_map.push_back(j);
    cols.push_back(m.col_degree(j));
    SparseColumn c;
    c.reserve(m.column(j).size());
    // every nonzero row of a column below alpha is itself below alpha
    for (const auto& e : m.column(j)) c.push_back({local[e.row], e.value});
    columns.push_back(std::move(c));
  }
  out.matrix = GradedMatrix(m.field(), m.dim(), std::move(rows), std::move(cols), std::move(columns));
  return out;
}

std::vector<SparseColumn> transpose_columns(const GradedMatrix& m) { return m.row_view(); }

GradedMatrix hconcat(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.row_degrees() != b.row_degrees()) throw PreconditionError("hconcat: row degrees differ");
  if (!(a.field() == b.field())) throw FieldError("hconcat: different fields");
  std::vector<Degree> cols = a.col_degrees();
  cols.insert(cols.end(), b.col_degrees().begin(), b.col_degrees().end());
  std::vector<SparseColumn> columns = a.columns();
  columns.insert(columns.end(), b.columns().begin(), b.columns().end());
  return GradedMatrix(a.field(), a.dim(), a.row_degrees(), std::move(cols), std::move(columns));
}

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.col_degrees() != b.row_degrees()) {
    throw PreconditionError("multiply: column degrees of the left factor differ from rows of the right");
  }
  if (!(a.field() == b.field())) throw FieldError("multiply: different fields");
  const PrimeField& f = a.field();
  std::vector<SparseColumn> columns;
  columns.reserve(b.num_cols());
  for (index j = 0; j < b.num_cols(); ++j) {
    SparseColumn c;
    for (const auto& e : b.column(j)) axpy(c, e.value, a.column(e.row), f);
    columns.push_back(std::move(c));
  }
  return GradedMatrix(f, a.dim(), a.row_degrees(), b.col_degrees(), std::move(columns));
}

}  // namespace grhom
