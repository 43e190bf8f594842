#pragma once

#include <string>

#include "grhom/field.hpp"
#include "grhom/graded_matrix.hpp"
#include "grhom/presentation.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(GRHOM_FIXTURE_DIR) + "/" + name; }

/// X of the running example: one generator at (2,2) killed at (6,2).
inline grhom::Presentation worked_x(grhom::PrimeField f = grhom::PrimeField(3)) {
  using grhom::Degree;
  return grhom::Presentation(
      grhom::GradedMatrix(f, 2, {Degree{2, 2}}, {Degree{6, 2}}, {{{0, 1}}}), true, "worked_x");
}

/// Y of the running example: generators (0,1),(1,0), relations a-b, b, a.
inline grhom::Presentation worked_y(grhom::PrimeField f = grhom::PrimeField(3)) {
  using grhom::Degree;
  return grhom::Presentation(
      grhom::GradedMatrix(f, 2, {Degree{0, 1}, Degree{1, 0}},
                          {Degree{2, 2}, Degree{5, 0}, Degree{5, 1}},
                          {{{0, 1}, {1, f.from_int(-1)}}, {{1, 1}}, {{0, 1}}}),
      true, "worked_y");
}

}  // namespace fixtures
