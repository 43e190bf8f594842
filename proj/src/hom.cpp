#include "grhom/hom.hpp"

#include <algorithm>
#include <chrono>

#include "grhom/errors.hpp"
#include "grhom/presentation_ops.hpp"

namespace grhom {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_pair(const Presentation& x, const Presentation& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("modules of different dimension");
  if (!(x.field() == y.field())) throw FieldError("modules over different fields");
}

bool trivially_zero(const Presentation& x, const Presentation& y) {
  return x.num_generators() == 0 || y.num_generators() == 0;
}

// Column reduction of Q-parts; keeps the reduced nonzero ones.
std::vector<GradedMatrix> reduce_plain(const std::vector<GradedMatrix>& qs, const Presentation& x,
                                       const Presentation& y) {
  if (qs.empty()) return {};
  HomotopyMatrix layout = homotopy_matrix(x.generators(), y);
  ColumnEchelon echelon(x.field(), layout.num_positions);
  std::vector<GradedMatrix> out;
  for (const auto& q : qs) {
    SparseColumn v = layout.flatten(q);
    echelon.reduce(v);
    if (v.empty()) continue;
    echelon.insert(v);
    std::vector<SparseColumn> cols(x.num_generators());
    for (index g = 0; g < x.num_generators(); ++g) {
      for (index gp = 0; gp < y.num_generators(); ++gp) {
        index pos = layout.position[g][gp];
        if (pos < 0) continue;
        coeff c = value_at(v, pos);
        if (c) cols[g].push_back({gp, c});
      }
    }
    out.emplace_back(x.field(), x.dim(), y.generators(), x.generators(), std::move(cols));
  }
  return out;
}

HomBasis solve_masked(const Presentation& x, const Presentation& y, const VariableMask& mask,
                      Algorithm alg, bool quotient) {
  HomBasis out;
  out.algorithm = alg;
  auto t0 = Clock::now();
  LinearSystem sys = LinearSystem::build(x, y, mask);
  std::vector<SparseColumn> sol = sys.solve();
  std::vector<GradedMatrix> qs;
  qs.reserve(sol.size());
  for (const auto& s : sol) qs.push_back(sys.q_part(s));
  std::size_t hrank = 0;
  out.basis = quotient ? homotopy_reduce(qs, y, &hrank) : reduce_plain(qs, x, y);
  out.stats = sys.stats();
  out.stats.solutions = sol.size();
  out.stats.homotopy_rank = hrank;
  out.stats.seconds = seconds_since(t0);
  return out;
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::direct: return "direct";
    case Algorithm::restricted: return "a";
    case Algorithm::mixed: return "mixed";
    case Algorithm::exact: return "b";
    case Algorithm::restricted_dual: return "a-star";
    case Algorithm::exact_dual: return "b-star";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  for (Algorithm a : {Algorithm::direct, Algorithm::restricted, Algorithm::mixed, Algorithm::exact,
                      Algorithm::restricted_dual, Algorithm::exact_dual, Algorithm::oracle}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view to_string(Coords c) {
  return c == Coords::generators ? "generators" : "cogenerators";
}

VariableMask VariableMask::full(const Presentation& x, const Presentation& y) {
  VariableMask mask;
  mask.q.resize(x.num_generators());
  mask.p.resize(x.num_relations());
  for (index g = 0; g < x.num_generators(); ++g) {
    for (index gp = 0; gp < y.num_generators(); ++gp) {
      if (leq(y.generators()[gp], x.generators()[g])) mask.q[g].push_back(gp);
    }
  }
  for (index r = 0; r < x.num_relations(); ++r) {
    for (index rp = 0; rp < y.num_relations(); ++rp) {
      if (leq(y.relations()[rp], x.relations()[r])) mask.p[r].push_back(rp);
    }
  }
  return mask;
}

LinearSystem LinearSystem::build(const Presentation& x, const Presentation& y, const VariableMask& mask) {
  check_pair(x, y);
  const PrimeField& field = x.field();
  LinearSystem sys;
  sys.x_ = &x;
  sys.y_ = &y;

  // equation[r][g'] = row id of the pair (g', r), or -1 when deg g' is not <= deg r.
  std::vector<std::vector<index>> equation(x.num_relations(), std::vector<index>(y.num_generators(), -1));
  index rows = 0;
  for (index r = 0; r < x.num_relations(); ++r) {
    for (index gp = 0; gp < y.num_generators(); ++gp) {
      if (leq(y.generators()[gp], x.relations()[r])) equation[r][gp] = rows++;
    }
  }
  sys.num_equations_ = static_cast<std::size_t>(rows);

  const std::vector<SparseColumn> m_rows = x.matrix.row_view();
  for (index g = 0; g < x.num_generators(); ++g) {
    for (index gp : mask.q[g]) {
      std::vector<Entry> e;
      for (const auto& [r, v] : m_rows[g]) e.push_back({equation[r][gp], v});
      sys.variables_.push_back({true, gp, g});
      sys.columns_.push_back(make_column(std::move(e), field));
    }
  }
  for (index r = 0; r < x.num_relations(); ++r) {
    for (index rp : mask.p[r]) {
      std::vector<Entry> e;
      for (const auto& [gp, v] : y.matrix.column(rp)) e.push_back({equation[r][gp], field.neg(v)});
      sys.variables_.push_back({false, rp, r});
      sys.columns_.push_back(make_column(std::move(e), field));
    }
  }
  return sys;
}

SystemStats LinearSystem::stats() const {
  SystemStats s;
  s.variables = variables_.size();
  s.equations = num_equations_;
  for (const auto& c : columns_) s.entries += c.size();
  return s;
}

std::vector<SparseColumn> LinearSystem::solve() const {
  return nullspace(columns_, static_cast<index>(num_equations_), x_->field());
}

GradedMatrix LinearSystem::q_part(const SparseColumn& solution) const {
  std::vector<std::vector<Entry>> cols(x_->num_generators());
  for (const auto& [var, v] : solution) {
    const Variable& a = variables_[var];
    if (a.is_q) cols[a.col].push_back({a.row, v});
  }
  std::vector<SparseColumn> out;
  for (auto& c : cols) out.push_back(make_column(std::move(c), x_->field()));
  return GradedMatrix(x_->field(), x_->dim(), y_->generators(), x_->generators(), std::move(out));
}

GradedMatrix LinearSystem::p_part(const SparseColumn& solution) const {
  std::vector<std::vector<Entry>> cols(x_->num_relations());
  for (const auto& [var, v] : solution) {
    const Variable& a = variables_[var];
    if (!a.is_q) cols[a.col].push_back({a.row, v});
  }
  std::vector<SparseColumn> out;
  for (auto& c : cols) out.push_back(make_column(std::move(c), x_->field()));
  return GradedMatrix(x_->field(), x_->dim(), y_->relations(), x_->relations(), std::move(out));
}

std::vector<GradedMatrix> presentation_morphisms(const Presentation& x, const Presentation& y,
                                                 SystemStats* stats) {
  LinearSystem sys = LinearSystem::build(x, y, VariableMask::full(x, y));
  std::vector<SparseColumn> sol = sys.solve();
  if (stats) {
    *stats = sys.stats();
    stats->solutions = sol.size();
  }
  std::vector<GradedMatrix> qs;
  for (const auto& s : sol) qs.push_back(sys.q_part(s));
  return qs;
}

SparseColumn HomotopyMatrix::flatten(const GradedMatrix& q) const {
  SparseColumn v;
  for (index g = 0; g < q.num_cols(); ++g) {
    for (const auto& [gp, c] : q.column(g)) {
      index pos = position[g][gp];
      if (pos < 0) throw GradingError("entry outside the admissible positions of Q");
      v.push_back({pos, c});
    }
  }
  // Positions grow with g and then g', so v is already sorted.
  return v;
}

HomotopyMatrix homotopy_matrix(std::span<const Degree> x_generators, const Presentation& y) {
  HomotopyMatrix h;
  const index ng = static_cast<index>(x_generators.size());
  h.position.assign(ng, std::vector<index>(y.num_generators(), -1));
  for (index g = 0; g < ng; ++g) {
    for (index gp = 0; gp < y.num_generators(); ++gp) {
      if (leq(y.generators()[gp], x_generators[g])) h.position[g][gp] = h.num_positions++;
    }
  }
  for (index g = 0; g < ng; ++g) {
    for (index rp = 0; rp < y.num_relations(); ++rp) {
      if (!leq(y.relations()[rp], x_generators[g])) continue;
      SparseColumn c;
      for (const auto& [gp, v] : y.matrix.column(rp)) c.push_back({h.position[g][gp], v});
      h.columns.push_back(std::move(c));
    }
  }
  return h;
}

std::vector<GradedMatrix> homotopy_reduce(std::span<const GradedMatrix> qs, const Presentation& y,
                                          std::size_t* homotopy_rank) {
  if (homotopy_rank) *homotopy_rank = 0;
  if (qs.empty()) return {};
  const GradedMatrix& shape = qs.front();
  for (const auto& q : qs) {
    if (q.row_degrees() != shape.row_degrees() || q.col_degrees() != shape.col_degrees()) {
      throw DimensionMismatch("homotopy_reduce needs equally decorated matrices");
    }
  }
  if (shape.row_degrees() != y.generators()) throw DimensionMismatch("rows of Q must be the generators of Y");
  const PrimeField& field = y.field();
  HomotopyMatrix h = homotopy_matrix(shape.col_degrees(), y);
  ColumnEchelon echelon(field, h.num_positions);
  for (const auto& c : h.columns) echelon.insert(c);
  if (homotopy_rank) *homotopy_rank = static_cast<std::size_t>(echelon.rank());

  std::vector<GradedMatrix> out;
  for (const auto& q : qs) {
    SparseColumn v = h.flatten(q);
    echelon.reduce(v);
    if (v.empty()) continue;
    echelon.insert(v);
    std::vector<SparseColumn> cols(shape.num_cols());
    for (index g = 0; g < shape.num_cols(); ++g) {
      for (index gp = 0; gp < shape.num_rows(); ++gp) {
        index pos = h.position[g][gp];
        if (pos < 0) continue;
        coeff c = value_at(v, pos);
        if (c) cols[g].push_back({gp, c});
      }
    }
    out.emplace_back(field, shape.dim(), shape.row_degrees(), shape.col_degrees(), std::move(cols));
  }
  return out;
}

HomBasis hom_direct(const Presentation& x, const Presentation& y) {
  check_pair(x, y);
  if (trivially_zero(x, y)) return HomBasis{{}, Coords::generators, Algorithm::direct, {}};
  return solve_masked(x, y, VariableMask::full(x, y), Algorithm::direct, true);
}

HomBasis hom_restricted(const Presentation& x, const Presentation& y) {
  check_pair(x, y);
  if (trivially_zero(x, y)) return HomBasis{{}, Coords::generators, Algorithm::restricted, {}};
  auto t0 = Clock::now();
  GradedMatrix o = kernel(y.matrix);
  VariableMask mask;
  mask.q = restriction_system(x, y.matrix, 0).subsets;
  mask.p = restriction_system(x, o, 1).subsets;
  HomBasis out = solve_masked(x, y, mask, Algorithm::restricted, false);
  out.stats.seconds = seconds_since(t0);
  return out;
}

HomBasis hom_mixed(const Presentation& x, const Presentation& y) {
  check_pair(x, y);
  if (trivially_zero(x, y)) return HomBasis{{}, Coords::generators, Algorithm::mixed, {}};
  auto t0 = Clock::now();
  VariableMask mask = VariableMask::full(x, y);
  mask.q = restriction_system(x, y.matrix, 0).subsets;
  HomBasis out = solve_masked(x, y, mask, Algorithm::mixed, true);
  out.stats.seconds = seconds_since(t0);
  return out;
}

HomBasis hom_exact(const Presentation& x, const Presentation& y) {
  check_pair(x, y);
  HomBasis out;
  out.algorithm = Algorithm::exact;
  if (trivially_zero(x, y)) return out;
  auto t0 = Clock::now();
  const PrimeField& field = x.field();
  CokernelCache cache(y.matrix);

  std::vector<index> col_offset(x.num_generators() + 1, 0);
  for (index g = 0; g < x.num_generators(); ++g) {
    col_offset[g + 1] = col_offset[g] + cache.at(x.generators()[g]).dim();
  }
  std::vector<index> row_offset(x.num_relations() + 1, 0);
  for (index r = 0; r < x.num_relations(); ++r) {
    row_offset[r + 1] = row_offset[r] + cache.at(x.relations()[r]).dim();
  }

  const std::vector<SparseColumn> m_rows = x.matrix.row_view();
  std::vector<SparseColumn> columns(col_offset.back());
  for (index g = 0; g < x.num_generators(); ++g) {
    const index dg = col_offset[g + 1] - col_offset[g];
    for (const auto& [r, m] : m_rows[g]) {
      DenseMatrix s = structure_map(y.matrix, x.generators()[g], x.relations()[r], &cache);
      for (index k = 0; k < dg; ++k) {
        SparseColumn block;
        for (index i = 0; i < s.rows(); ++i) {
          if (s(i, k)) block.push_back({row_offset[r] + i, field.mul(m, s(i, k))});
        }
        axpy(columns[col_offset[g] + k], 1, block, field);
      }
    }
  }
  out.stats.variables = columns.size();
  out.stats.equations = static_cast<std::size_t>(row_offset.back());
  for (const auto& c : columns) out.stats.entries += c.size();

  std::vector<SparseColumn> null = nullspace(columns, row_offset.back(), field);
  out.stats.solutions = null.size();
  for (const auto& v : null) {
    std::vector<std::vector<Entry>> cols(x.num_generators());
    for (const auto& [var, c] : v) {
      index g = static_cast<index>(std::upper_bound(col_offset.begin(), col_offset.end(), var) -
                                   col_offset.begin()) - 1;
      cols[g].push_back({cache.at(x.generators()[g]).basis[var - col_offset[g]], c});
    }
    std::vector<SparseColumn> q;
    for (auto& c : cols) q.push_back(make_column(std::move(c), field));
    out.basis.emplace_back(field, x.dim(), y.generators(), x.generators(), std::move(q));
  }
  out.stats.seconds = seconds_since(t0);
  return out;
}

bool verify_hom(const GradedMatrix& q, const Presentation& x, const Presentation& y) {
  if (q.row_degrees() != y.generators() || q.col_degrees() != x.generators()) {
    throw DimensionMismatch("Q must map the generators of X to the generators of Y");
  }
  if (!validate_grading(q)) return false;
  GradedMatrix qm = multiply(q, x.matrix);
  CokernelCache cache(y.matrix);
  for (index r = 0; r < qm.num_cols(); ++r) {
    for (coeff v : cache.at(qm.col_degree(r)).apply(qm.column(r), y.field())) {
      if (v != 0) return false;
    }
  }
  return true;
}

namespace {

// Block-diagonal copy of m, one block per shift, with every degree moved by -shift.
GradedMatrix shifted_sum(const GradedMatrix& m, std::span<const Degree> shifts) {
  std::vector<Degree> rows, cols;
  std::vector<SparseColumn> columns;
  index row_base = 0;
  for (const auto& s : shifts) {
    for (const auto& a : m.row_degrees()) rows.push_back(a - s);
    for (index j = 0; j < m.num_cols(); ++j) {
      cols.push_back(m.col_degree(j) - s);
      SparseColumn c;
      for (const auto& [i, v] : m.column(j)) c.push_back({row_base + i, v});
      columns.push_back(std::move(c));
    }
    row_base += m.num_rows();
  }
  return GradedMatrix(m.field(), m.dim(), std::move(rows), std::move(cols), std::move(columns));
}

}  // namespace

Presentation hom_module_presentation(const Presentation& x, const Presentation& y) {
  check_pair(x, y);
  const PrimeField& field = x.field();
  const std::size_t d = x.dim();
  if (trivially_zero(x, y)) return Presentation::zero(field, d);
  const index ny = y.num_generators();

  // Lift of  (+)_g Y[deg g] -> (+)_r Y[deg r]: block (r, g) is M_{g,r} times the identity.
  std::vector<Degree> lift_rows, lift_cols;
  for (const auto& r : x.relations()) {
    for (const auto& a : y.generators()) lift_rows.push_back(a - r);
  }
  for (const auto& g : x.generators()) {
    for (const auto& a : y.generators()) lift_cols.push_back(a - g);
  }
  const std::vector<SparseColumn> m_rows = x.matrix.row_view();
  std::vector<SparseColumn> lift(lift_cols.size());
  for (index g = 0; g < x.num_generators(); ++g) {
    for (index gp = 0; gp < ny; ++gp) {
      for (const auto& [r, v] : m_rows[g]) lift[g * ny + gp].push_back({r * ny + gp, v});
    }
  }

  // Z: kernel of [lift | -N''] with N'' the relations of (+)_r Y[deg r].
  GradedMatrix n_rel = shifted_sum(y.matrix, x.relations());
  std::vector<Degree> zc = lift_cols;
  zc.insert(zc.end(), n_rel.col_degrees().begin(), n_rel.col_degrees().end());
  std::vector<SparseColumn> zcols = lift;
  for (auto c : n_rel.columns()) {
    scale_column(c, field.neg(1), field);
    zcols.push_back(std::move(c));
  }
  GradedMatrix z = kernel(GradedMatrix(field, d, lift_rows, zc, zcols));

  // i: the (+)_g part of Z, as a map A[Z] -> (+)_g A[G' - deg g].
  const index first = static_cast<index>(lift_cols.size());
  std::vector<SparseColumn> icols;
  for (const auto& c : z.columns()) {
    SparseColumn part;
    for (const auto& e : c) {
      if (e.row < first) part.push_back(e);
    }
    icols.push_back(std::move(part));
  }
  GradedMatrix i(field, d, lift_cols, z.col_degrees(), icols);

  // Hom(X,Y) = A[Z] / { w : i w in im N' }, read off from ker [i | -N'].
  GradedMatrix n_gen = shifted_sum(y.matrix, x.generators());
  std::vector<Degree> wc = i.col_degrees();
  wc.insert(wc.end(), n_gen.col_degrees().begin(), n_gen.col_degrees().end());
  std::vector<SparseColumn> wcols = icols;
  for (auto c : n_gen.columns()) {
    scale_column(c, field.neg(1), field);
    wcols.push_back(std::move(c));
  }
  GradedMatrix w = kernel(GradedMatrix(field, d, lift_cols, wc, wcols));
  const index nz = i.num_cols();
  std::vector<SparseColumn> rel;
  for (const auto& c : w.columns()) {
    SparseColumn part;
    for (const auto& e : c) {
      if (e.row < nz) part.push_back(e);
    }
    rel.push_back(std::move(part));
  }
  return minimize(Presentation(GradedMatrix(field, d, z.col_degrees(), w.col_degrees(), std::move(rel))));
}

}  // namespace grhom
