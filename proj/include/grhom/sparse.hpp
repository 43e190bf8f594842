#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "grhom/field.hpp"

namespace grhom {

using index = int;

struct Entry {
  index row;
  coeff value;
  bool operator==(const Entry&) const = default;
};

/// Sorted by row, strictly increasing, no stored zeros.
using SparseColumn = std::vector<Entry>;

/// target += scale * source
void axpy(SparseColumn& target, coeff scale, const SparseColumn& source,
          const PrimeField& field);
void scale_column(SparseColumn& column, coeff scale, const PrimeField& field);

/// Lowest nonzero row (the largest row index), if any.
inline std::optional<index> pivot_row(const SparseColumn& column) {
  if (column.empty()) return std::nullopt;
  return column.back().row;
}

coeff value_at(const SparseColumn& column, index row);

bool is_canonical(const SparseColumn& column, const PrimeField& field);

/// Builds a canonical column from (row, value) pairs in any order; zeros dropped,
/// duplicate rows summed.
SparseColumn make_column(std::vector<Entry> entries, const PrimeField& field);

/**
 * @brief Incremental left-to-right column reduction with lowest-row pivots.
 *
 * Every inserted column is reduced against the pivots already present. Nonzero
 * results become new pivots. With record=true each stored column remembers the
 * combination of inserted columns it equals (indices in insertion order).
 */
class ColumnEchelon {
 public:
  ColumnEchelon(PrimeField field, index num_rows, bool record = false);

  /// Reduces v in place against the stored pivots. If log is given it receives
  /// the combination of inserted columns that was added to v.
  void reduce(SparseColumn& v, SparseColumn* log = nullptr) const;

  /// Reduces and stores the column. Returns true iff it was independent.
  bool insert(SparseColumn v);

  bool contains(SparseColumn v) const;

  index rank() const noexcept { return static_cast<index>(pivot_columns_.size()); }
  index num_inserted() const noexcept { return static_cast<index>(reduced_.size()); }
  index num_rows() const noexcept { return num_rows_; }

  const std::vector<SparseColumn>& reduced() const noexcept { return reduced_; }
  /// Combination of inserted columns producing reduced()[j]; empty without record.
  const std::vector<SparseColumn>& log() const noexcept { return log_; }
  /// pivot_owner()[row] = inserted column index owning that pivot, or -1.
  const std::vector<index>& pivot_owner() const noexcept { return pivot_owner_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  PrimeField field_;
  index num_rows_;
  bool record_;
  std::vector<SparseColumn> reduced_;
  std::vector<SparseColumn> log_;
  std::vector<index> pivot_owner_;
  std::vector<index> pivot_columns_;
};

/// Result of a full left-to-right sweep. Zero columns keep their slot.
struct ColumnSpan {
  std::vector<SparseColumn> reduced;
  std::vector<index> pivot_owner;  ///< row -> column index, -1 if no pivot
  std::vector<SparseColumn> log;   ///< empty unless recorded
  index rank = 0;

  std::vector<index> zero_columns() const;
  std::vector<index> nonzero_columns() const;
};

ColumnSpan column_reduce(std::span<const SparseColumn> columns, index num_rows,
                         const PrimeField& field, bool record = false);

/// Basis of the nullspace of the matrix whose columns are given: one vector per
/// column that reduces to zero, read off from the recorded operations.
std::vector<SparseColumn> nullspace(std::span<const SparseColumn> columns,
                                    index num_rows, const PrimeField& field);

}  // namespace grhom
