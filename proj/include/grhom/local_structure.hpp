#pragma once

#include <map>
#include <span>
#include <vector>

#include "grhom/dense.hpp"
#include "grhom/graded_matrix.hpp"
#include "grhom/grid.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

/**
 * @brief Cokernel of N restricted to degrees <= alpha.
 *
 * map is d_alpha: K^{domain} -> Y_alpha, with columns indexed by domain (rows
 * of N of degree <= alpha, original order). basis lists the pivot-free rows;
 * map restricted to the basis columns is the identity.
 */
struct LocalCokernel {
  Degree degree;
  std::vector<index> domain;
  std::vector<index> basis;
  DenseMatrix map;
  std::vector<index> local_of_row;  ///< original row -> position in domain, or -1

  index dim() const noexcept { return static_cast<index>(basis.size()); }
  bool contains_row(index row) const {
    return row >= 0 && row < static_cast<index>(local_of_row.size()) && local_of_row[row] >= 0;
  }
  /// Image in Y_alpha of a vector over the rows of N. Rows not <= alpha must be absent.
  std::vector<coeff> apply(const SparseColumn& v, const PrimeField& field) const;
  /// Image of the unit vector at an original row.
  std::vector<coeff> image_of_row(index row) const;
};

LocalCokernel local_cokernel(const GradedMatrix& n, const Degree& alpha);

/// Memo of local cokernels of one matrix, scoped to a single computation.
class CokernelCache {
 public:
  explicit CokernelCache(const GradedMatrix& n) : n_(&n) {}
  const LocalCokernel& at(const Degree& alpha);
  const GradedMatrix& matrix() const noexcept { return *n_; }

 private:
  const GradedMatrix* n_;
  std::map<Degree, LocalCokernel> cache_;
};

/// Distinguished subsets of a target stage matrix attached to the generators
/// (stage 0) or relations (stage 1) of X.
struct RestrictionSystem {
  int stage = 0;
  std::vector<Degree> degrees;
  std::vector<std::vector<index>> subsets;

  std::size_t total_size() const;
};

RestrictionSystem restriction_system(const Presentation& x, const GradedMatrix& stage_matrix,
                                     int stage, CokernelCache* cache = nullptr);

/// Y_{alpha -> beta} as a dim Y_beta x dim Y_alpha matrix in the distinguished bases.
DenseMatrix structure_map(const GradedMatrix& n, const Degree& alpha, const Degree& beta,
                          CokernelCache* cache = nullptr);

index hilbert_at(const Presentation& p, const Degree& alpha);

Grid evaluation_grid(const Presentation& p);
Grid evaluation_grid(std::span<const Presentation* const> presentations);

index thickness(const Presentation& p);
/// max dim Y_alpha over alpha in the given set of degrees; 0 for an empty set.
index max_dim_at(const Presentation& y, std::span<const Degree> degrees);
/// max dim Y_alpha over the generator and relation degrees of X.
index betti_restricted_thickness(const Presentation& x, const Presentation& y);

}  // namespace grhom
