// Command-line front end. Exit codes: 0 ok, 1 usage, 2 file, 3 parse,
// 4 resource cap, 5 cross-check mismatch, 6 other computation error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "grhom/bench.hpp"
#include "grhom/dual_hom.hpp"
#include "grhom/errors.hpp"
#include "grhom/grid_oracle.hpp"
#include "grhom/hom.hpp"
#include "grhom/io.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"
#include "grhom/random.hpp"

namespace {

using namespace grhom;

enum Exit { ok = 0, usage = 1, file = 2, parse = 3, resource = 4, mismatch = 5, compute = 6 };

struct Options {
  std::string x_path, y_path, out, stats;
  std::string alg = "a";
  std::optional<std::uint32_t> field;
  bool check = false;
  std::uint64_t seed = 0;
  std::size_t grid_cap = default_grid_cap;
};

Presentation load(const std::string& path, const Options& o) {
  return parse_presentation(read_file(path), o.field);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
  }
}

HomBasis run(const Presentation& x, const Presentation& y, Algorithm a, const Options& o) {
  return a == Algorithm::oracle ? hom_oracle_basis(x, y, o.grid_cap) : hom(x, y, a);
}

int cmd_hom(const Options& o, const Presentation& x, const Presentation& y, const std::string& id) {
  auto alg = algorithm_from_string(o.alg);
  if (!alg) {
    std::cerr << "error: unknown algorithm '" << o.alg << "'\n";
    return usage;
  }
  HomBasis main = run(x, y, *alg, o);
  std::vector<HomBasis> all{main};
  if (o.check) {
    for (Algorithm a : {Algorithm::direct, Algorithm::restricted, Algorithm::mixed, Algorithm::exact,
                        Algorithm::restricted_dual, Algorithm::exact_dual, Algorithm::oracle}) {
      if (a != *alg) all.push_back(run(x, y, a, o));
    }
    std::ostringstream report;
    bool agree = true;
    for (const auto& b : all) {
      report << " " << to_string(b.algorithm) << "=" << b.dim();
      agree = agree && b.dim() == main.dim();
      if (b.coords == Coords::generators) {
        for (const auto& q : b.basis) {
          if (!verify_hom(q, x, y)) {
            agree = false;
            report << "(unverified)";
            break;
          }
        }
      }
    }
    if (!agree) throw CheckMismatch("algorithms disagree:" + report.str());
    std::cerr << "check passed:" << report.str() << "\n";
  }
  if (!o.stats.empty()) {
    std::ofstream csv(o.stats);
    if (!csv) throw FileError("cannot write '" + o.stats + "'");
    csv << bench_csv_header();
    for (const auto& b : all) csv << to_csv(make_record(id, b, x, y));
  }
  emit(o, serialize_hom_basis(main, x.dim(), x.field().characteristic()));
  return ok;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return file;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return resource;
  } catch (const CheckMismatch& e) {
    std::cerr << "check mismatch: " << e.what() << "\n";
    return mismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return compute;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bases of Hom spaces between finitely presented multigraded modules"};
  app.require_subcommand(1);
  Options o;
  auto field_opt = [&](CLI::App* c) {
    c->add_option("--field", o.field, "prime characteristic (firep input; must match pmod headers)")
        ->check(CLI::Range(2u, 2147483647u));
  };

  auto* hom_cmd = app.add_subcommand("hom", "basis of Hom(X, Y)");
  auto* end_cmd = app.add_subcommand("end", "basis of End(X)");
  for (auto* c : {hom_cmd, end_cmd}) {
    c->add_option("X", o.x_path, "source module")->required();
    if (c == hom_cmd) c->add_option("Y", o.y_path, "target module")->required();
    c->add_option("--alg", o.alg, "direct|a|mixed|b|a-star|b-star|oracle")
        ->check(CLI::IsMember({"direct", "a", "mixed", "b", "a-star", "b-star", "oracle"}));
    c->add_flag("--check", o.check, "run every algorithm and the oracle, require agreement");
    c->add_option("--stats", o.stats, "write statistics CSV");
    c->add_option("--out", o.out, "output path (default stdout)");
    c->add_option("--grid-cap", o.grid_cap, "maximum oracle grid size");
    c->add_option("--seed", o.seed, "unused; accepted for uniform scripting");
    field_opt(c);
  }

  auto* thick_cmd = app.add_subcommand("thickness", "maximum of the Hilbert function");
  thick_cmd->add_option("X", o.x_path)->required();
  bool betti = false;
  thick_cmd->add_flag("--betti", betti, "also print the maximum over the Betti degrees");
  field_opt(thick_cmd);

  auto* min_cmd = app.add_subcommand("minimize", "minimal presentation");
  auto* sparse_cmd = app.add_subcommand("sparsify", "presentation with at most thick+1 entries per column");
  for (auto* c : {min_cmd, sparse_cmd}) {
    c->add_option("X", o.x_path)->required();
    c->add_option("--out", o.out);
    field_opt(c);
  }

  RandomSpec spec;
  auto* rand_cmd = app.add_subcommand("random", "random minimal presentation");
  BenchConfig bench;
  std::string algs = "direct,mixed,a,b";
  bool pairs = false;
  auto* bench_cmd = app.add_subcommand("bench", "system sizes and wall times on a random corpus");
  for (auto* c : {rand_cmd, bench_cmd}) {
    c->add_option("--seed", spec.seed);
    c->add_option("--d", spec.d)->check(CLI::Range(1, 8));
    c->add_option("--gens", spec.gens)->check(CLI::NonNegativeNumber);
    c->add_option("--rels", spec.rels)->check(CLI::NonNegativeNumber);
    c->add_option("--range", spec.coord_range)->check(CLI::PositiveNumber);
    c->add_option("--hint", spec.thickness_hint)->check(CLI::PositiveNumber);
    c->add_option("--field", spec.field)->check(CLI::Range(2u, 2147483647u));
    c->add_option("--out", o.out);
  }
  bench_cmd->add_option("--count", bench.count)->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--algs", algs, "comma separated algorithm names");
  bench_cmd->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--pairs", pairs, "Hom(X, Y) for independent X, Y instead of End(X)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  if (spec.field < 2 || !is_prime(spec.field)) {
    std::cerr << "error: --field must be prime\n";
    return usage;
  }
  if (o.field && !is_prime(*o.field)) {
    std::cerr << "error: --field must be prime\n";
    return usage;
  }

  return guarded([&]() -> int {
    if (*hom_cmd) return cmd_hom(o, load(o.x_path, o), load(o.y_path, o), o.x_path + "|" + o.y_path);
    if (*end_cmd) {
      Presentation x = load(o.x_path, o);
      return cmd_hom(o, x, x, o.x_path);
    }
    if (*thick_cmd) {
      Presentation x = load(o.x_path, o);
      std::cout << thickness(x) << "\n";
      if (betti) std::cout << betti_restricted_thickness(x, x) << "\n";
      return ok;
    }
    if (*min_cmd) {
      emit(o, serialize_pmod(minimize(load(o.x_path, o))));
      return ok;
    }
    if (*sparse_cmd) {
      emit(o, serialize_pmod(sparsify(minimize(load(o.x_path, o)))));
      return ok;
    }
    if (*rand_cmd) {
      emit(o, serialize_pmod(random_module(spec)));
      return ok;
    }
    if (*bench_cmd) {
      bench.module = spec;
      bench.endomorphisms = !pairs;
      bench.algorithms.clear();
      std::stringstream ss(algs);
      for (std::string name; std::getline(ss, name, ',');) {
        auto a = algorithm_from_string(name);
        if (!a) {
          std::cerr << "error: unknown algorithm '" << name << "'\n";
          return usage;
        }
        bench.algorithms.push_back(*a);
      }
      std::ostringstream csv;
      run_bench(bench, csv);
      emit(o, csv.str());
      return ok;
    }
    return usage;
  });
}
