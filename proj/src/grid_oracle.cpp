#include "grhom/grid_oracle.hpp"

#include <algorithm>
#include <chrono>

#include "grhom/errors.hpp"

namespace grhom {
namespace {

// Dense and row-sparse elimination kept separate from the column engine.

struct Rref {
  std::vector<std::vector<coeff>> rows;
  std::vector<index> pivots;
};

Rref rref(std::vector<std::vector<coeff>> a, index cols, const PrimeField& f) {
  Rref out;
  index r = 0;
  const index n = static_cast<index>(a.size());
  for (index c = 0; c < cols && r < n; ++c) {
    index sel = -1;
    for (index i = r; i < n; ++i) {
      if (a[i][c]) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    const coeff s = f.inv(a[r][c]);
    for (auto& v : a[r]) v = f.mul(v, s);
    for (index i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const coeff t = f.neg(a[i][c]);
      for (index k = 0; k < cols; ++k) a[i][k] = f.add(a[i][k], f.mul(t, a[r][k]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f) {
  DenseMatrix c(a.rows(), b.cols());
  for (index i = 0; i < a.rows(); ++i)
    for (index k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      for (index j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

// Incremental row echelon over n variables; pivot = smallest variable.
class RowEchelon {
 public:
  RowEchelon(index n, const PrimeField& f) : n_(n), f_(f), owner_(n, -1), acc_(n, 0) {}

  struct Row {
    std::vector<index> var;
    std::vector<coeff> val;
  };

  // Returns true iff the row was independent.
  bool insert(const std::vector<std::pair<index, coeff>>& entries) {
    index lo = n_, hi = -1;
    for (const auto& [v, c] : entries) {
      acc_[v] = f_.add(acc_[v], c);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    index lead = -1;
    for (index v = lo; v <= hi; ++v) {
      if (!acc_[v]) continue;
      if (owner_[v] < 0) {
        if (lead < 0) lead = v;
        continue;
      }
      const Row& r = rows_[owner_[v]];
      const coeff t = f_.neg(acc_[v]);
      for (std::size_t k = 0; k < r.var.size(); ++k) acc_[r.var[k]] = f_.add(acc_[r.var[k]], f_.mul(t, r.val[k]));
      hi = std::max(hi, r.var.back());
    }
    if (lead < 0) {
      for (index v = std::max<index>(lo, 0); v <= hi; ++v) acc_[v] = 0;
      return false;
    }
    Row row;
    const coeff s = f_.inv(acc_[lead]);
    for (index v = lead; v <= hi; ++v) {
      if (acc_[v]) {
        row.var.push_back(v);
        row.val.push_back(f_.mul(acc_[v], s));
      }
    }
    for (index v = lo; v <= hi; ++v) acc_[v] = 0;
    owner_[lead] = static_cast<index>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  index rank() const { return static_cast<index>(rows_.size()); }

  // One solution per free variable, by back substitution.
  std::vector<std::vector<coeff>> nullspace() const {
    std::vector<std::vector<coeff>> out;
    for (index fvar = 0; fvar < n_; ++fvar) {
      if (owner_[fvar] >= 0) continue;
      std::vector<coeff> x(n_, 0);
      x[fvar] = 1;
      for (index p = n_ - 1; p >= 0; --p) {
        if (owner_[p] < 0) continue;
        const Row& r = rows_[owner_[p]];
        coeff s = 0;
        for (std::size_t k = 1; k < r.var.size(); ++k) s = f_.add(s, f_.mul(r.val[k], x[r.var[k]]));
        x[p] = f_.neg(s);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  index n_;
  PrimeField f_;
  std::vector<index> owner_;
  std::vector<Row> rows_;
  std::vector<coeff> acc_;
};

bool same_grid(const GridModule& a, const GridModule& b) { return a.grid == b.grid; }

}  // namespace

std::vector<coeff> GridModule::project(std::size_t flat, index generator) const {
  const auto& b = below[flat];
  auto it = std::lower_bound(b.begin(), b.end(), generator);
  if (it == b.end() || *it != generator) throw PreconditionError("generator not below grid point");
  const index col = static_cast<index>(it - b.begin());
  std::vector<coeff> out(dim_at(flat));
  for (index k = 0; k < dim_at(flat); ++k) out[k] = projection[flat](k, col);
  return out;
}

GridModule realize_grid(const Presentation& p, const Grid& grid, std::size_t cap) {
  if (grid.size() > cap) {
    throw ResourceError("grid has " + std::to_string(grid.size()) + " points, cap is " + std::to_string(cap));
  }
  if (grid.dim() != p.dim()) throw DimensionMismatch("grid dimension does not match module");
  const GradedMatrix& m = p.matrix;
  const PrimeField& f = p.field();
  GridModule g;
  g.grid = grid;
  g.field = f;
  const std::size_t n = grid.size();
  g.below.resize(n);
  g.projection.resize(n);
  g.section.resize(n);
  g.edge.resize(n);

  for (std::size_t a = 0; a < n; ++a) {
    const Degree pt = grid.point(a);
    auto& rows = g.below[a];
    for (index i = 0; i < m.num_rows(); ++i) {
      if (leq(m.row_degree(i), pt)) rows.push_back(i);
    }
    std::vector<index> rels;
    for (index j = 0; j < m.num_cols(); ++j) {
      if (leq(m.col_degree(j), pt)) rels.push_back(j);
    }
    const index k = static_cast<index>(rows.size());
    // Left nullspace of N_{<=a}: nullspace of its transpose.
    std::vector<std::vector<coeff>> t(rels.size(), std::vector<coeff>(k, 0));
    for (std::size_t r = 0; r < rels.size(); ++r) {
      for (index c = 0; c < k; ++c) t[r][c] = m.at(rows[c], rels[r]);
    }
    Rref e = rref(std::move(t), k, f);
    std::vector<bool> is_pivot(k, false);
    for (index c : e.pivots) is_pivot[c] = true;
    std::vector<index> free;
    for (index c = 0; c < k; ++c) {
      if (!is_pivot[c]) free.push_back(c);
    }
    DenseMatrix pi(static_cast<index>(free.size()), k);
    for (std::size_t s = 0; s < free.size(); ++s) {
      pi(static_cast<index>(s), free[s]) = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) pi(static_cast<index>(s), e.pivots[r]) = f.neg(e.rows[r][free[s]]);
    }
    // pi restricted to the free columns is the identity.
    g.projection[a] = std::move(pi);
    for (index c : free) g.section[a].push_back(rows[c]);
  }

  for (std::size_t a = 0; a < n; ++a) {
    g.edge[a].resize(grid.dim());
    for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
      const std::size_t b = grid.successor(a, axis);
      if (b >= n) continue;
      DenseMatrix e(g.dim_at(b), g.dim_at(a));
      for (index k = 0; k < g.dim_at(a); ++k) {
        auto col = g.project(b, g.section[a][k]);
        for (index i = 0; i < g.dim_at(b); ++i) e(i, k) = col[i];
      }
      g.edge[a][axis] = std::move(e);
    }
  }
  return g;
}

GridModule realize_grid(const Presentation& p, std::size_t cap) {
  const GradedMatrix* m = &p.matrix;
  return realize_grid(p, grid_from_degrees(p.dim(), std::span<const GradedMatrix* const>(&m, 1)), cap);
}

bool squares_commute(const GridModule& m) {
  const std::size_t n = m.grid.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < m.grid.dim(); ++i) {
      for (std::size_t j = i + 1; j < m.grid.dim(); ++j) {
        const std::size_t ai = m.grid.successor(a, i), aj = m.grid.successor(a, j);
        if (ai >= n || aj >= n) continue;
        const std::size_t top = m.grid.successor(ai, j);
        DenseMatrix p1 = mul(m.edge[ai][j], m.edge[a][i], m.field);
        DenseMatrix p2 = mul(m.edge[aj][i], m.edge[a][j], m.field);
        if (!(p1 == p2) || p1.rows() != m.dim_at(top)) return false;
      }
    }
  }
  return true;
}

OracleHom hom_oracle(const GridModule& gx, const GridModule& gy) {
  if (!same_grid(gx, gy)) throw DimensionMismatch("oracle needs both modules on the same grid");
  const PrimeField& f = gx.field;
  const std::size_t n = gx.grid.size();
  // Variable block of point a: f_a entries (i, j) at offset[a] + i * dimX + j.
  std::vector<index> offset(n + 1, 0);
  for (std::size_t a = 0; a < n; ++a) offset[a + 1] = offset[a] + gy.dim_at(a) * gx.dim_at(a);
  const index nvars = offset[n];

  OracleHom out;
  out.variables = static_cast<std::size_t>(nvars);
  RowEchelon ech(nvars, f);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t axis = 0; axis < gx.grid.dim(); ++axis) {
      const std::size_t b = gx.grid.successor(a, axis);
      if (b >= n) continue;
      const DenseMatrix& ex = gx.edge[a][axis];  // dimX_b x dimX_a
      const DenseMatrix& ey = gy.edge[a][axis];  // dimY_b x dimY_a
      const index xa = gx.dim_at(a), xb = gx.dim_at(b), ya = gy.dim_at(a), yb = gy.dim_at(b);
      // (f_b ex - ey f_a)(i, j) = 0
      for (index i = 0; i < yb; ++i) {
        for (index j = 0; j < xa; ++j) {
          std::vector<std::pair<index, coeff>> row;
          for (index k = 0; k < xb; ++k) {
            if (ex(k, j)) row.emplace_back(offset[b] + i * xb + k, ex(k, j));
          }
          for (index l = 0; l < ya; ++l) {
            if (ey(i, l)) row.emplace_back(offset[a] + l * xa + j, f.neg(ey(i, l)));
          }
          ++out.equations;
          out.entries += row.size();
          if (!row.empty()) ech.insert(row);
        }
      }
    }
  }
  for (const auto& x : ech.nullspace()) {
    GridMorphism fm(n);
    for (std::size_t a = 0; a < n; ++a) {
      DenseMatrix fa(gy.dim_at(a), gx.dim_at(a));
      for (index i = 0; i < fa.rows(); ++i)
        for (index j = 0; j < fa.cols(); ++j) fa(i, j) = x[offset[a] + i * fa.cols() + j];
      fm[a] = std::move(fa);
    }
    out.solutions.push_back(std::move(fm));
  }
  out.dim = out.solutions.size();
  return out;
}

GridMorphism push_to_grid(const GradedMatrix& q, const GridModule& gx, const GridModule& gy) {
  if (!same_grid(gx, gy)) throw DimensionMismatch("grids differ");
  const PrimeField& f = gx.field;
  GridMorphism out(gx.grid.size());
  for (std::size_t a = 0; a < gx.grid.size(); ++a) {
    DenseMatrix fa(gy.dim_at(a), gx.dim_at(a));
    for (index k = 0; k < gx.dim_at(a); ++k) {
      for (const auto& [gp, c] : q.column(gx.section[a][k])) {
        auto img = gy.project(a, gp);
        for (index i = 0; i < fa.rows(); ++i) fa(i, k) = f.add(fa(i, k), f.mul(c, img[i]));
      }
    }
    out[a] = std::move(fa);
  }
  return out;
}

bool is_natural(const GridMorphism& fm, const GridModule& gx, const GridModule& gy) {
  const PrimeField& f = gx.field;
  for (std::size_t a = 0; a < gx.grid.size(); ++a) {
    for (std::size_t axis = 0; axis < gx.grid.dim(); ++axis) {
      const std::size_t b = gx.grid.successor(a, axis);
      if (b >= gx.grid.size()) continue;
      if (!(mul(fm[b], gx.edge[a][axis], f) == mul(gy.edge[a][axis], fm[a], f))) return false;
    }
  }
  return true;
}

std::size_t morphism_rank(const std::vector<GridMorphism>& fs, const PrimeField& field) {
  if (fs.empty()) return 0;
  std::vector<std::vector<coeff>> rows;
  for (const auto& fm : fs) {
    std::vector<coeff> v;
    for (const auto& m : fm)
      for (index i = 0; i < m.rows(); ++i)
        for (index j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    rows.push_back(std::move(v));
  }
  const index cols = static_cast<index>(rows.front().size());
  return rref(std::move(rows), cols, field).pivots.size();
}

HomBasis hom_oracle_basis(const Presentation& x, const Presentation& y, std::size_t cap) {
  if (x.dim() != y.dim()) throw DimensionMismatch("modules of different dimension");
  if (!(x.field() == y.field())) throw FieldError("modules over different fields");
  HomBasis out;
  out.algorithm = Algorithm::oracle;
  auto t0 = std::chrono::steady_clock::now();
  const GradedMatrix* ms[] = {&x.matrix, &y.matrix};
  Grid grid = grid_from_degrees(x.dim(), ms);
  if (x.num_generators() == 0 || y.num_generators() == 0) return out;
  GridModule gx = realize_grid(x, grid, cap);
  GridModule gy = realize_grid(y, grid, cap);
  OracleHom h = hom_oracle(gx, gy);
  out.stats.variables = h.variables;
  out.stats.equations = h.equations;
  out.stats.entries = h.entries;
  out.stats.solutions = h.dim;
  const PrimeField& f = x.field();
  for (const auto& fm : h.solutions) {
    std::vector<SparseColumn> cols(x.num_generators());
    for (index g = 0; g < x.num_generators(); ++g) {
      std::vector<index> idx(x.dim());
      for (std::size_t i = 0; i < x.dim(); ++i) {
        const auto& ax = grid.axes[i];
        idx[i] = static_cast<index>(std::lower_bound(ax.begin(), ax.end(), x.generators()[g][i]) - ax.begin());
      }
      std::vector<std::size_t> mi(idx.begin(), idx.end());
      const std::size_t a = grid.flat_index(mi);
      auto v = gx.project(a, g);
      std::vector<Entry> entries;
      for (index i = 0; i < gy.dim_at(a); ++i) {
        coeff s = 0;
        for (index k = 0; k < gx.dim_at(a); ++k) s = f.add(s, f.mul(fm[a](i, k), v[k]));
        if (s) entries.push_back({gy.section[a][i], s});
      }
      cols[g] = make_column(std::move(entries), f);
    }
    out.basis.emplace_back(f, x.dim(), y.generators(), x.generators(), std::move(cols));
  }
  // Representatives leave the grid as generator images; bring them to the same
  // reduced form the solver routes return. The size stays h.dim because the
  // natural maps are independent in Hom, not merely in the morphism space.
  out.basis = homotopy_reduce(out.basis, y);
  out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace grhom
