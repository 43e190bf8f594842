#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grhom/degree.hpp"
#include "grhom/graded_matrix.hpp"

namespace grhom {

/// Finite product grid: one sorted list of distinct coordinates per axis.
/// Points are addressed by a flat index with axis 0 varying fastest.
struct Grid {
  std::vector<std::vector<int>> axes;

  std::size_t dim() const noexcept { return axes.size(); }
  std::size_t size() const noexcept;
  Degree point(std::size_t flat) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  std::size_t flat_index(std::span<const std::size_t> multi) const;
  /// Flat index of the next point along an axis, or size() at the boundary.
  std::size_t successor(std::size_t flat, std::size_t axis) const;
  std::vector<Degree> points() const;

  bool operator==(const Grid&) const = default;
};

/// Per-axis sorted unique coordinates of every row and column degree.
Grid grid_from_degrees(std::size_t d, std::span<const GradedMatrix* const> matrices);

}  // namespace grhom
