#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "grhom/hom.hpp"
#include "grhom/random.hpp"

namespace grhom {

struct BenchConfig {
  RandomSpec module;  ///< seed of instance k is module.seed + k
  int count = 10;
  std::vector<Algorithm> algorithms{Algorithm::direct, Algorithm::mixed, Algorithm::restricted, Algorithm::exact};
  unsigned jobs = 1;
  bool endomorphisms = true;  ///< End(X); otherwise Hom(X, Y) with Y drawn from the next seed
};

/// Runs every instance with every algorithm and writes one CSV row per run,
/// in instance order regardless of how workers interleave.
void run_bench(const BenchConfig& config, std::ostream& csv);

}  // namespace grhom
