#pragma once

#include <optional>

#include "grhom/hom.hpp"
#include "grhom/presentation.hpp"

namespace grhom {

/**
 * @brief Shared data of the dual algorithms for one pair (X, Y).
 *
 * Both inputs are truncated at the same omega and resolved; o and p are the
 * last maps of the two resolutions. xd = p^t[1] presents a dual of Y and
 * yd = o^t[1] a dual of X, so Hom(xd, yd) is isomorphic to Hom(X, Y).
 */
struct DualContext {
  Degree omega;
  Presentation x_truncated;
  Presentation y_truncated;
  Resolution x_resolution;
  Resolution y_resolution;
  Presentation xd;
  Presentation yd;
  bool trivial = false;  ///< one of the truncated modules is zero

  /// Throws PreconditionError unless every last map has zero kernel.
  static DualContext build(const Presentation& x, const Presentation& y,
                           std::optional<Degree> omega = std::nullopt,
                           std::optional<std::size_t> max_length = std::nullopt);
};

/// Result matrices have rows indexed by the cogenerators of Y, columns by
/// those of X, each decorated with the generator degree of the dual minus one.
HomBasis hom_restricted_dual(const Presentation& x, const Presentation& y);
HomBasis hom_exact_dual(const Presentation& x, const Presentation& y);
HomBasis hom_dual(const DualContext& ctx, Algorithm primal);

}  // namespace grhom
