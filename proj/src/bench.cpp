#include "grhom/bench.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "grhom/grid_oracle.hpp"
#include "grhom/io.hpp"

namespace grhom {

void run_bench(const BenchConfig& config, std::ostream& csv) {
  const int n = std::max(0, config.count);
  std::vector<std::optional<std::string>> done(n);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(n);

  auto run_one = [&](int k) {
    RandomSpec sx = config.module;
    sx.seed = config.module.seed + static_cast<std::uint64_t>(k);
    Presentation x = random_module(sx);
    Presentation y = x;
    if (!config.endomorphisms) {
      RandomSpec sy = sx;
      sy.seed = sx.seed + 0x9e3779b97f4a7c15ULL;
      y = random_module(sy);
    }
    std::string rows;
    const std::string id = "seed" + std::to_string(sx.seed);
    for (Algorithm a : config.algorithms) {
      HomBasis b = a == Algorithm::oracle ? hom_oracle_basis(x, y) : hom(x, y, a);
      rows += to_csv(make_record(id, b, x, y));
    }
    return rows;
  };

  auto work = [&] {
    for (int k = next++; k < n; k = next++) {
      std::string rows;
      std::exception_ptr error;
      try {
        rows = run_one(k);
      } catch (...) {
        error = std::current_exception();
        next = n;
      }
      {
        std::lock_guard lock(mutex);
        errors[k] = error;
        done[k] = std::move(rows);
      }
      ready.notify_all();
    }
  };

  csv << bench_csv_header();
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(work);
  // Single writer: emits rows strictly in instance order.
  std::exception_ptr failure;
  for (int k = 0; k < n && !failure; ++k) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return done[k].has_value(); });
    if (errors[k]) {
      failure = errors[k];
      break;
    }
    csv << *done[k];
    done[k].reset();
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace grhom
