#pragma once

// Degree-wise brute force on top of the dense routines.

#include <vector>

#include "grhom/graded_matrix.hpp"
#include "grhom/presentation.hpp"
#include "support/dense_oracle.hpp"

namespace oracle {

/// Dense copy of the rows and columns of degree <= alpha.
inline Mat slice(const grhom::GradedMatrix& m, const grhom::Degree& alpha, std::vector<int>* rows = nullptr,
                 std::vector<int>* cols = nullptr) {
  std::vector<int> r, c;
  for (int i = 0; i < m.num_rows(); ++i) if (grhom::leq(m.row_degree(i), alpha)) r.push_back(i);
  for (int j = 0; j < m.num_cols(); ++j) if (grhom::leq(m.col_degree(j), alpha)) c.push_back(j);
  Mat a(r.size(), std::vector<long long>(c.size(), 0));
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) a[i][j] = m.at(r[i], c[j]);
  if (rows) *rows = r;
  if (cols) *cols = c;
  return a;
}

inline int hilbert(const grhom::Presentation& p, const grhom::Degree& alpha) {
  std::vector<int> rows;
  Mat a = slice(p.matrix, alpha, &rows);
  if (rows.empty()) return 0;
  if (a[0].empty()) return static_cast<int>(rows.size());
  return static_cast<int>(rows.size()) - rank(a, p.field().characteristic());
}

/// Every integer point of the box spanned by the degrees, padded by one.
inline std::vector<grhom::Degree> integer_box(const grhom::GradedMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<int> lo(d, 0), hi(d, 0);
  bool first = true;
  for (const auto* ds : {&m.row_degrees(), &m.col_degrees()}) {
    for (const auto& a : *ds) {
      for (std::size_t i = 0; i < d; ++i) {
        lo[i] = first ? a[i] : std::min(lo[i], a[i]);
        hi[i] = first ? a[i] : std::max(hi[i], a[i]);
      }
      first = false;
    }
  }
  std::vector<grhom::Degree> out;
  std::vector<int> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = lo[i] - 1;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = 0;
    while (i < d && ++cur[i] > hi[i] + 1) { cur[i] = lo[i] - 1; ++i; }
    if (i == d) break;
  }
  return out;
}

}  // namespace oracle
