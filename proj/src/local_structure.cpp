#include "grhom/local_structure.hpp"

#include <algorithm>
#include <set>

#include "grhom/errors.hpp"

namespace grhom {

std::vector<coeff> LocalCokernel::apply(const SparseColumn& v, const PrimeField& field) const {
  std::vector<coeff> out(basis.size(), 0);
  for (const auto& e : v) {
    index local = contains_row(e.row) ? local_of_row[e.row] : -1;
    if (local < 0) throw PreconditionError("vector has support outside degree " + to_string(degree));
    for (index k = 0; k < dim(); ++k) {
      out[k] = field.add(out[k], field.mul(e.value, map(k, local)));
    }
  }
  return out;
}

std::vector<coeff> LocalCokernel::image_of_row(index row) const {
  std::vector<coeff> out(basis.size(), 0);
  index local = local_of_row.at(row);
  if (local < 0) throw PreconditionError("row not below degree " + to_string(degree));
  for (index k = 0; k < dim(); ++k) out[k] = map(k, local);
  return out;
}

LocalCokernel local_cokernel(const GradedMatrix& n, const Degree& alpha) {
  if (alpha.dim() != n.dim()) throw DimensionMismatch("degree dimension does not match matrix");
  const PrimeField& field = n.field();
  Submatrix sub = submatrix_at_most(n, alpha);
  const index m = static_cast<index>(sub.row_map.size());

  ColumnEchelon echelon(field, m);
  for (const auto& c : sub.matrix.columns()) echelon.insert(c);
  const auto& owner = echelon.pivot_owner();

  LocalCokernel lc;
  lc.degree = alpha;
  lc.domain = sub.row_map;
  lc.local_of_row.assign(n.num_rows(), -1);
  for (index k = 0; k < m; ++k) lc.local_of_row[lc.domain[k]] = k;

  std::vector<index> position(m, -1);
  for (index k = 0; k < m; ++k) {
    if (owner[k] < 0) {
      position[k] = static_cast<index>(lc.basis.size());
      lc.basis.push_back(lc.domain[k]);
    }
  }
  const index dim = static_cast<index>(lc.basis.size());
  lc.map = DenseMatrix(dim, m);
  // A pivot column reads c_p e_p + sum_{i<p} c_i e_i = 0 in the cokernel, so each
  // pivot row is determined by rows above it; ascending order resolves them.
  for (index k = 0; k < m; ++k) {
    if (owner[k] < 0) {
      lc.map(position[k], k) = 1;
      continue;
    }
    const SparseColumn& c = echelon.reduced()[owner[k]];
    coeff factor = field.neg(field.inv(c.back().value));
    for (std::size_t t = 0; t + 1 < c.size(); ++t) {
      coeff s = field.mul(factor, c[t].value);
      for (index r = 0; r < dim; ++r) {
        lc.map(r, k) = field.add(lc.map(r, k), field.mul(s, lc.map(r, c[t].row)));
      }
    }
  }
  return lc;
}

const LocalCokernel& CokernelCache::at(const Degree& alpha) {
  auto it = cache_.find(alpha);
  if (it == cache_.end()) it = cache_.emplace(alpha, local_cokernel(*n_, alpha)).first;
  return it->second;
}

std::size_t RestrictionSystem::total_size() const {
  std::size_t n = 0;
  for (const auto& s : subsets) n += s.size();
  return n;
}

RestrictionSystem restriction_system(const Presentation& x, const GradedMatrix& stage_matrix,
                                     int stage, CokernelCache* cache) {
  if (stage != 0 && stage != 1) throw PreconditionError("restriction stage must be 0 or 1");
  CokernelCache local(stage_matrix);
  CokernelCache& c = cache ? *cache : local;
  RestrictionSystem rs;
  rs.stage = stage;
  rs.degrees = stage == 0 ? x.generators() : x.relations();
  for (const auto& deg : rs.degrees) rs.subsets.push_back(c.at(deg).basis);
  return rs;
}

DenseMatrix structure_map(const GradedMatrix& n, const Degree& alpha, const Degree& beta,
                          CokernelCache* cache) {
  if (!leq(alpha, beta)) {
    throw PreconditionError("structure map needs " + to_string(alpha) + " <= " + to_string(beta));
  }
  CokernelCache local(n);
  CokernelCache& c = cache ? *cache : local;
  const LocalCokernel& a = c.at(alpha);
  const LocalCokernel& b = c.at(beta);
  DenseMatrix out(b.dim(), a.dim());
  for (index j = 0; j < a.dim(); ++j) {
    index col = b.local_of_row[a.basis[j]];
    for (index i = 0; i < b.dim(); ++i) out(i, j) = b.map(i, col);
  }
  return out;
}

index hilbert_at(const Presentation& p, const Degree& alpha) {
  return local_cokernel(p.matrix, alpha).dim();
}

Grid evaluation_grid(const Presentation& p) {
  const GradedMatrix* m = &p.matrix;
  return grid_from_degrees(p.dim(), std::span<const GradedMatrix* const>(&m, 1));
}

Grid evaluation_grid(std::span<const Presentation* const> presentations) {
  std::vector<const GradedMatrix*> ms;
  std::size_t d = 0;
  for (const Presentation* p : presentations) {
    if (!ms.empty() && p->dim() != d) throw DimensionMismatch("presentations of different dimension");
    d = p->dim();
    ms.push_back(&p->matrix);
  }
  return grid_from_degrees(d, ms);
}

index thickness(const Presentation& p) {
  if (p.num_generators() == 0) return 0;
  Grid grid = evaluation_grid(p);
  CokernelCache cache(p.matrix);
  index best = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) best = std::max(best, cache.at(grid.point(k)).dim());
  return best;
}

index max_dim_at(const Presentation& y, std::span<const Degree> degrees) {
  CokernelCache cache(y.matrix);
  index best = 0;
  for (const auto& a : degrees) best = std::max(best, cache.at(a).dim());
  return best;
}

index betti_restricted_thickness(const Presentation& x, const Presentation& y) {
  std::set<Degree> s(x.generators().begin(), x.generators().end());
  s.insert(x.relations().begin(), x.relations().end());
  std::vector<Degree> degrees(s.begin(), s.end());
  return max_dim_at(y, degrees);
}

}  // namespace grhom
