#pragma once

#include <cstddef>
#include <vector>

#include "grhom/dense.hpp"
#include "grhom/grid.hpp"
#include "grhom/hom.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

inline constexpr std::size_t default_grid_cap = 10000;

/**
 * @brief A module realized as vector spaces and maps on a finite grid.
 *
 * At each point a, projection[a] maps K^{below[a]} onto X_a; its rows span the
 * left nullspace of the presentation restricted to a, in reduced echelon
 * form. section[a][k] is the generator whose unit vector maps to basis
 * vector k. edge[a][i] is the map X_a -> X_{a + e_i} for grid successors.
 */
struct GridModule {
  Grid grid;
  PrimeField field;
  std::vector<std::vector<index>> below;
  std::vector<DenseMatrix> projection;
  std::vector<std::vector<index>> section;
  std::vector<std::vector<DenseMatrix>> edge;

  index dim_at(std::size_t flat) const { return projection[flat].rows(); }
  /// Coordinates in X_a of the unit vector of generator g (g must be <= a).
  std::vector<coeff> project(std::size_t flat, index generator) const;
};

/// Throws ResourceError when grid.size() exceeds cap.
GridModule realize_grid(const Presentation& p, const Grid& grid, std::size_t cap = default_grid_cap);
GridModule realize_grid(const Presentation& p, std::size_t cap = default_grid_cap);

/// Every grid square commutes.
bool squares_commute(const GridModule& m);

/// f[point] : X_a -> Y_a for one natural transformation.
using GridMorphism = std::vector<DenseMatrix>;

struct OracleHom {
  std::size_t dim = 0;
  std::size_t variables = 0;
  std::size_t equations = 0;
  std::size_t entries = 0;
  std::vector<GridMorphism> solutions;
};

OracleHom hom_oracle(const GridModule& gx, const GridModule& gy);

/// Q (rows G', columns G) evaluated at every grid point.
GridMorphism push_to_grid(const GradedMatrix& q, const GridModule& gx, const GridModule& gy);

bool is_natural(const GridMorphism& f, const GridModule& gx, const GridModule& gy);

/// Rank of a family of grid morphisms viewed as vectors.
std::size_t morphism_rank(const std::vector<GridMorphism>& fs, const PrimeField& field);

/// Oracle solutions as graded matrices in generator coordinates.
HomBasis hom_oracle_basis(const Presentation& x, const Presentation& y,
                          std::size_t cap = default_grid_cap);

}  // namespace grhom
