#pragma once

#include <optional>
#include <span>

#include "grhom/graded_matrix.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

/// Unit cancellation to fixpoint, then removal of redundant relations.
Presentation minimize(const Presentation& p);

/// Minimal generators of ker M as a submodule of A[cols(M)]. Rows of the
/// result are the columns of M. Dispatches on d.
GradedMatrix kernel(const GradedMatrix& m);
/// Single sweep in a linear extension of the order; d = 2 only.
GradedMatrix kernel_bivariate(const GradedMatrix& m);
/// Degree-by-degree over the join-closure of column degrees; any d.
GradedMatrix kernel_general(const GradedMatrix& m);

/// d_1 = P.matrix, d_{k+1} = kernel(d_k), up to `length` maps. A zero kernel
/// ends the sequence early. A presentation without relations gives no maps.
Resolution free_resolution(const Presentation& p, std::size_t length);

/// Join of every degree in the operands plus one on each axis.
Degree default_truncation_bound(std::span<const Presentation* const> presentations);

/// Kills every generator at omega_i along each axis i; omega must dominate all degrees.
Presentation truncate(const Presentation& p, const Degree& omega);

/// Transpose with every degree a mapped to 1 - a.
GradedMatrix matlis_transpose_shift(const GradedMatrix& m);

/// Isomorphic minimal presentation with at most thick+1 entries per column.
Presentation sparsify(const Presentation& p);

/// Presentation of Y[alpha], i.e. every degree moved by -alpha.
Presentation shift(const Presentation& p, const Degree& alpha);
GradedMatrix shift(const GradedMatrix& m, const Degree& alpha);

}  // namespace grhom
