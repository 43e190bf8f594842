#pragma once

#include <cstdint>
#include <random>

#include "grhom/presentation.hpp"

namespace grhom {

/// mt19937_64 with a rejection-sampled bounded draw, so streams agree across
/// standard libraries (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t d = 2;
  int gens = 4;
  int rels = 4;
  int coord_range = 8;  ///< generator coordinates in [0, coord_range)
  int thickness_hint = 1;
  std::uint32_t field = 2;
};

/// Minimal presentation drawn from the spec. A larger hint moves relations
/// further from their base generator and mixes in more generators.
Presentation random_module(const RandomSpec& spec);

}  // namespace grhom
