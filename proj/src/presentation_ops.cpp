#include "grhom/presentation_ops.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "grhom/errors.hpp"
#include "grhom/local_structure.hpp"

namespace grhom {
namespace {

std::vector<index> lex_order(const std::vector<Degree>& degrees) {
  std::vector<index> order(degrees.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](index a, index b) { return degrees[a] < degrees[b]; });
  return order;
}

// Keeps a column iff it is not in the span of kept columns of degree <= its own.
std::vector<index> minimal_generating_subset(const std::vector<SparseColumn>& columns,
                                             const std::vector<Degree>& degrees,
                                             index num_rows, const PrimeField& field) {
  std::vector<index> kept;
  for (index j : lex_order(degrees)) {
    if (columns[j].empty()) continue;
    ColumnEchelon echelon(field, num_rows);
    for (index k : kept) {
      if (leq(degrees[k], degrees[j])) echelon.insert(columns[k]);
    }
    if (!echelon.contains(columns[j])) kept.push_back(j);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Presentation minimize(const Presentation& p) {
  const GradedMatrix& m = p.matrix;
  const PrimeField& field = m.field();
  std::vector<SparseColumn> cols = m.columns();
  std::vector<bool> row_alive(m.num_rows(), true);
  std::vector<bool> col_alive(m.num_cols(), true);

  bool changed = true;
  while (changed) {
    changed = false;
    for (index j = 0; j < m.num_cols(); ++j) {
      if (!col_alive[j]) continue;
      auto unit = std::find_if(cols[j].begin(), cols[j].end(), [&](const Entry& e) {
        return row_alive[e.row] && m.row_degree(e.row) == m.col_degree(j);
      });
      if (unit == cols[j].end()) continue;
      const index row = unit->row;
      const coeff inv = field.inv(unit->value);
      for (index k = 0; k < m.num_cols(); ++k) {
        if (k == j || !col_alive[k]) continue;
        coeff v = value_at(cols[k], row);
        if (v != 0) axpy(cols[k], field.neg(field.mul(v, inv)), cols[j], field);
      }
      row_alive[row] = false;
      col_alive[j] = false;
      changed = true;
    }
  }

  std::vector<index> new_row(m.num_rows(), -1);
  std::vector<Degree> rows;
  for (index i = 0; i < m.num_rows(); ++i) {
    if (row_alive[i]) {
      new_row[i] = static_cast<index>(rows.size());
      rows.push_back(m.row_degree(i));
    }
  }
  std::vector<SparseColumn> remaining;
  std::vector<Degree> degrees;
  for (index j = 0; j < m.num_cols(); ++j) {
    if (!col_alive[j]) continue;
    SparseColumn c;
    for (const auto& e : cols[j]) {
      // A dead row's entries were cleared by the cancellation that killed it.
      if (new_row[e.row] >= 0) c.push_back({new_row[e.row], e.value});
    }
    remaining.push_back(std::move(c));
    degrees.push_back(m.col_degree(j));
  }

  std::vector<index> kept =
      minimal_generating_subset(remaining, degrees, static_cast<index>(rows.size()), field);
  std::vector<SparseColumn> out_cols;
  std::vector<Degree> out_degrees;
  for (index j : kept) {
    out_cols.push_back(std::move(remaining[j]));
    out_degrees.push_back(degrees[j]);
  }
  return Presentation(GradedMatrix(field, m.dim(), std::move(rows), std::move(out_degrees),
                                   std::move(out_cols)),
                      true, p.label);
}

GradedMatrix kernel(const GradedMatrix& m) {
  return m.dim() == 2 ? kernel_bivariate(m) : kernel_general(m);
}

namespace {

GradedMatrix assemble_kernel(const GradedMatrix& m, std::vector<std::pair<Degree, SparseColumn>> gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Degree> degrees;
  std::vector<SparseColumn> columns;
  for (auto& [deg, col] : gens) {
    degrees.push_back(deg);
    columns.push_back(std::move(col));
  }
  return GradedMatrix(m.field(), m.dim(), m.col_degrees(), std::move(degrees), std::move(columns));
}

}  // namespace

GradedMatrix kernel_bivariate(const GradedMatrix& m) {
  if (m.dim() != 2) throw DimensionMismatch("bivariate kernel needs d = 2");
  const PrimeField& field = m.field();
  const index n = m.num_cols();
  std::vector<int> ys;
  for (const auto& c : m.col_degrees()) ys.push_back(c[1]);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](index a, index b) { return m.col_degree(a) < m.col_degree(b); });

  std::vector<bool> done(n, false);
  std::vector<std::pair<Degree, SparseColumn>> gens;
  for (int y : ys) {
    // Active columns in (x, y) order: at any (x0, y) the columns <= (x0, y) form a prefix.
    std::vector<index> active;
    for (index j : order) {
      if (m.col_degree(j)[1] <= y) active.push_back(j);
    }
    ColumnEchelon echelon(field, m.num_rows(), true);
    for (std::size_t pos = 0; pos < active.size(); ++pos) {
      const index j = active[pos];
      if (echelon.insert(m.column(j)) || done[j]) continue;
      done[j] = true;
      std::vector<Entry> entries;
      for (const auto& e : echelon.log().back()) entries.push_back({active[e.row], e.value});
      gens.emplace_back(Degree({m.col_degree(j)[0], y}), make_column(std::move(entries), field));
    }
  }
  return assemble_kernel(m, std::move(gens));
}

GradedMatrix kernel_general(const GradedMatrix& m) {
  const PrimeField& field = m.field();
  std::set<Degree> base(m.col_degrees().begin(), m.col_degrees().end());
  std::set<Degree> closure = base;
  std::vector<Degree> frontier(base.begin(), base.end());
  while (!frontier.empty()) {
    std::vector<Degree> next;
    for (const auto& a : frontier) {
      for (const auto& b : base) {
        Degree j = join(a, b);
        if (closure.insert(j).second) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<Degree, SparseColumn>> gens;
  for (const Degree& alpha : closure) {
    std::vector<index> cols;
    std::vector<SparseColumn> sub;
    for (index j = 0; j < m.num_cols(); ++j) {
      if (leq(m.col_degree(j), alpha)) {
        cols.push_back(j);
        sub.push_back(m.column(j));
      }
    }
    std::vector<SparseColumn> null = nullspace(sub, m.num_rows(), field);
    if (null.empty()) continue;
    ColumnEchelon echelon(field, m.num_cols());
    for (const auto& [deg, col] : gens) {
      if (leq(deg, alpha)) echelon.insert(col);
    }
    for (const auto& v : null) {
      std::vector<Entry> entries;
      for (const auto& e : v) entries.push_back({cols[e.row], e.value});
      SparseColumn w = make_column(std::move(entries), field);
      if (echelon.insert(w)) gens.emplace_back(alpha, std::move(w));
    }
  }
  return assemble_kernel(m, std::move(gens));
}

Resolution free_resolution(const Presentation& p, std::size_t length) {
  Resolution res;
  if (p.num_relations() == 0 || length == 0) return res;
  res.maps.push_back(p.matrix);
  while (res.maps.size() < length) {
    GradedMatrix k = kernel(res.maps.back());
    if (k.num_cols() == 0) break;
    res.maps.push_back(std::move(k));
  }
  return res;
}

Degree default_truncation_bound(std::span<const Presentation* const> presentations) {
  if (presentations.empty()) throw PreconditionError("no presentations given");
  const std::size_t d = presentations.front()->dim();
  std::vector<Degree> all;
  for (const Presentation* p : presentations) {
    if (p->dim() != d) throw DimensionMismatch("presentations of different dimension");
    all.insert(all.end(), p->generators().begin(), p->generators().end());
    all.insert(all.end(), p->relations().begin(), p->relations().end());
  }
  if (all.empty()) return Degree::ones(d);
  return join_all(all) + Degree::ones(d);
}

Presentation truncate(const Presentation& p, const Degree& omega) {
  const GradedMatrix& m = p.matrix;
  if (omega.dim() != m.dim()) throw DimensionMismatch("truncation bound dimension");
  for (const auto* degrees : {&m.row_degrees(), &m.col_degrees()}) {
    for (const auto& a : *degrees) {
      if (!leq(a, omega)) {
        throw PreconditionError("truncation bound " + to_string(omega) + " does not dominate " +
                                to_string(a));
      }
    }
  }
  std::vector<Degree> cols = m.col_degrees();
  std::vector<SparseColumn> columns = m.columns();
  for (index g = 0; g < m.num_rows(); ++g) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
      cols.push_back(m.row_degree(g).with(i, omega[i]));
      columns.push_back({{g, 1}});
    }
  }
  Presentation wide(GradedMatrix(m.field(), m.dim(), m.row_degrees(), std::move(cols),
                                 std::move(columns)),
                    false, p.label);
  return minimize(wide);
}

GradedMatrix matlis_transpose_shift(const GradedMatrix& m) {
  const Degree one = Degree::ones(m.dim());
  auto flip = [&](const std::vector<Degree>& ds) {
    std::vector<Degree> out;
    out.reserve(ds.size());
    for (const auto& a : ds) out.push_back(one - a);
    return out;
  };
  return GradedMatrix(m.field(), m.dim(), flip(m.col_degrees()), flip(m.row_degrees()),
                      m.row_view());
}

Presentation sparsify(const Presentation& p) {
  Presentation mp = p.minimal ? p : minimize(p);
  const GradedMatrix& m = mp.matrix;
  const PrimeField& field = m.field();

  std::vector<index> order = lex_order(m.col_degrees());
  std::vector<Degree> out_degrees;
  std::vector<SparseColumn> out_cols;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t stop = start;
    const Degree omega = m.col_degree(order[start]);
    while (stop < order.size() && m.col_degree(order[stop]) == omega) ++stop;

    GradedMatrix processed(field, m.dim(), m.row_degrees(), out_degrees, out_cols);
    LocalCokernel lc = local_cokernel(processed, omega);
    // Lift each relation into the basis rows of coker(processed) at omega.
    ColumnEchelon echelon(field, m.num_rows());
    for (std::size_t t = start; t < stop; ++t) {
      std::vector<coeff> img = lc.apply(m.column(order[t]), field);
      std::vector<Entry> entries;
      for (index k = 0; k < lc.dim(); ++k) entries.push_back({lc.basis[k], img[k]});
      echelon.insert(make_column(std::move(entries), field));
    }
    std::vector<SparseColumn> batch;
    for (const auto& c : echelon.reduced()) {
      if (!c.empty()) batch.push_back(c);
    }
    // Reduced echelon form: clear every pivot row from the other columns,
    // largest pivot first so later steps never refill it.
    std::sort(batch.begin(), batch.end(),
              [](const SparseColumn& a, const SparseColumn& b) { return a.back().row > b.back().row; });
    for (auto& a : batch) scale_column(a, field.inv(a.back().value), field);
    for (std::size_t ai = 0; ai < batch.size(); ++ai) {
      const index pr = batch[ai].back().row;
      for (std::size_t bi = 0; bi < batch.size(); ++bi) {
        if (bi == ai) continue;
        coeff v = value_at(batch[bi], pr);
        if (v != 0) axpy(batch[bi], field.neg(v), batch[ai], field);
      }
    }
    for (auto& c : batch) {
      out_degrees.push_back(omega);
      out_cols.push_back(std::move(c));
    }
    start = stop;
  }
  return Presentation(GradedMatrix(field, m.dim(), m.row_degrees(), std::move(out_degrees),
                                   std::move(out_cols)),
                      true, mp.label);
}

GradedMatrix shift(const GradedMatrix& m, const Degree& alpha) {
  auto move = [&](const std::vector<Degree>& ds) {
    std::vector<Degree> out;
    out.reserve(ds.size());
    for (const auto& a : ds) out.push_back(a - alpha);
    return out;
  };
  return GradedMatrix(m.field(), m.dim(), move(m.row_degrees()), move(m.col_degrees()),
                      m.columns());
}

Presentation shift(const Presentation& p, const Degree& alpha) {
  return Presentation(shift(p.matrix, alpha), p.minimal, p.label);
}

}  // namespace grhom
