#include "grhom/grid.hpp"

#include <algorithm>

namespace grhom {

std::size_t Grid::size() const noexcept {
  if (axes.empty()) return 0;
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

std::vector<std::size_t> Grid::multi_index(std::size_t flat) const {
  std::vector<std::size_t> m(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    m[i] = flat % axes[i].size();
    flat /= axes[i].size();
  }
  return m;
}

std::size_t Grid::flat_index(std::span<const std::size_t> multi) const {
  std::size_t flat = 0;
  for (std::size_t i = axes.size(); i-- > 0;) flat = flat * axes[i].size() + multi[i];
  return flat;
}

Degree Grid::point(std::size_t flat) const {
  std::vector<int> c(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    c[i] = axes[i][flat % axes[i].size()];
    flat /= axes[i].size();
  }
  return Degree(std::move(c));
}

std::size_t Grid::successor(std::size_t flat, std::size_t axis) const {
  auto m = multi_index(flat);
  if (m[axis] + 1 >= axes[axis].size()) return size();
  ++m[axis];
  return flat_index(m);
}

std::vector<Degree> Grid::points() const {
  std::vector<Degree> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(point(k));
  return out;
}

Grid grid_from_degrees(std::size_t d, std::span<const GradedMatrix* const> matrices) {
  Grid grid;
  grid.axes.resize(d);
  for (const GradedMatrix* m : matrices) {
    for (const auto* degrees : {&m->row_degrees(), &m->col_degrees()}) {
      for (const auto& g : *degrees) {
        for (std::size_t i = 0; i < d; ++i) grid.axes[i].push_back(g[i]);
      }
    }
  }
  for (auto& a : grid.axes) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return grid;
}

}  // namespace grhom
