#include "grhom/dual_hom.hpp"

#include "grhom/errors.hpp"
#include "grhom/presentation_ops.hpp"

namespace grhom {

DualContext DualContext::build(const Presentation& x, const Presentation& y, std::optional<Degree> omega,
                               std::optional<std::size_t> max_length) {
  if (x.dim() != y.dim()) throw DimensionMismatch("modules of different dimension");
  DualContext ctx;
  const Presentation* both[] = {&x, &y};
  ctx.omega = omega ? *omega : default_truncation_bound(both);
  ctx.x_truncated = truncate(x, ctx.omega);
  ctx.y_truncated = truncate(y, ctx.omega);
  if (ctx.x_truncated.num_generators() == 0 || ctx.y_truncated.num_generators() == 0) {
    ctx.trivial = true;
    return ctx;
  }
  const std::size_t length = max_length ? *max_length : x.dim();
  ctx.x_resolution = free_resolution(ctx.x_truncated, length);
  ctx.y_resolution = free_resolution(ctx.y_truncated, length);
  for (const Resolution* r : {&ctx.x_resolution, &ctx.y_resolution}) {
    if (r->empty() || kernel(r->maps.back()).num_cols() != 0) {
      throw PreconditionError("resolution did not terminate within the length cap");
    }
  }
  const GradedMatrix& o = ctx.x_resolution.maps.back();
  const GradedMatrix& p = ctx.y_resolution.maps.back();
  GradedMatrix pt = matlis_transpose_shift(p);
  GradedMatrix ot = matlis_transpose_shift(o);
  if (!(matlis_transpose_shift(pt) == p) || !(matlis_transpose_shift(ot) == o)) {
    throw Error("Matlis transposition is not an involution on the resolution stage");
  }
  ctx.xd = Presentation(std::move(pt), true, "dual of Y");
  ctx.yd = Presentation(std::move(ot), true, "dual of X");
  return ctx;
}

HomBasis hom_dual(const DualContext& ctx, Algorithm primal) {
  HomBasis out;
  out.coords = Coords::cogenerators;
  out.algorithm = primal == Algorithm::restricted ? Algorithm::restricted_dual : Algorithm::exact_dual;
  if (ctx.trivial) return out;
  HomBasis b = primal == Algorithm::restricted ? hom_restricted(ctx.xd, ctx.yd)
               : primal == Algorithm::exact    ? hom_exact(ctx.xd, ctx.yd)
                                               : throw PreconditionError("dual route needs algorithm a or b");
  out.stats = b.stats;
  // Q: gens(yd) x gens(xd). Transposing and negating degrees gives a graded
  // matrix from the cogenerators of X to those of Y.
  for (const auto& q : b.basis) {
    std::vector<Degree> rows, cols;
    for (const auto& a : q.col_degrees()) rows.push_back(-a);
    for (const auto& a : q.row_degrees()) cols.push_back(-a);
    out.basis.emplace_back(q.field(), q.dim(), std::move(rows), std::move(cols), q.row_view());
  }
  return out;
}

HomBasis hom_restricted_dual(const Presentation& x, const Presentation& y) {
  return hom_dual(DualContext::build(x, y), Algorithm::restricted);
}

HomBasis hom_exact_dual(const Presentation& x, const Presentation& y) {
  return hom_dual(DualContext::build(x, y), Algorithm::exact);
}

HomBasis hom(const Presentation& x, const Presentation& y, Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::direct: return hom_direct(x, y);
    case Algorithm::restricted: return hom_restricted(x, y);
    case Algorithm::mixed: return hom_mixed(x, y);
    case Algorithm::exact: return hom_exact(x, y);
    case Algorithm::restricted_dual: return hom_restricted_dual(x, y);
    case Algorithm::exact_dual: return hom_exact_dual(x, y);
    case Algorithm::oracle: break;
  }
  throw PreconditionError("the grid oracle is not dispatched through hom()");
}

}  // namespace grhom
