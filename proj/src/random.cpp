#include "grhom/random.hpp"

#include <algorithm>
#include <limits>

#include "grhom/errors.hpp"
#include "grhom/presentation_ops.hpp"

namespace grhom {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Presentation random_module(const RandomSpec& spec) {
  if (spec.gens < 0 || spec.rels < 0 || spec.coord_range < 1 || spec.d < 1) {
    throw PreconditionError("random_module needs non-negative counts and positive range");
  }
  PrimeField field(spec.field);
  Rng rng(spec.seed);
  const int hint = std::max(1, spec.thickness_hint);

  std::vector<Degree> gens;
  for (int g = 0; g < spec.gens; ++g) {
    std::vector<int> c(spec.d);
    for (auto& x : c) x = rng.between(0, spec.coord_range - 1);
    gens.emplace_back(std::move(c));
  }
  std::vector<Degree> rels;
  std::vector<SparseColumn> cols;
  if (!gens.empty()) {
    for (int r = 0; r < spec.rels; ++r) {
      const index base = static_cast<index>(rng.below(gens.size()));
      std::vector<int> c(gens[base].coords().begin(), gens[base].coords().end());
      for (auto& x : c) x += rng.between(0, hint + 1);
      Degree deg(std::move(c));
      std::vector<Entry> entries{{base, static_cast<coeff>(rng.between(1, spec.field - 1))}};
      const int extra = rng.between(0, hint);
      for (int t = 0; t < extra; ++t) {
        const index h = static_cast<index>(rng.below(gens.size()));
        if (leq(gens[h], deg)) entries.push_back({h, static_cast<coeff>(rng.between(1, spec.field - 1))});
      }
      rels.push_back(std::move(deg));
      cols.push_back(make_column(std::move(entries), field));
    }
  }
  Presentation p(GradedMatrix(field, spec.d, std::move(gens), std::move(rels), std::move(cols)));
  return minimize(p);
}

}  // namespace grhom
