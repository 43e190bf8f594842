// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria. All equalities are exact; the only tolerances are the
// wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "grhom/dual_hom.hpp"
#include "grhom/grid_oracle.hpp"
#include "grhom/hom.hpp"
#include "grhom/io.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/module_oracle.hpp"

using namespace grhom;

namespace {

constexpr double kWorkedExampleSeconds = 1e-3;  // per algorithm
constexpr double kEquivalenceSuiteSeconds = 60.0;
constexpr int kEquivalencePairs = 200;
constexpr int kDualityPairs = 50;
constexpr int kSparsifyCases = 50;
constexpr int kHomModulePairs = 30;
constexpr int kHomModuleShifts = 5;
constexpr int kOrderingInstances = 30;

using Clock = std::chrono::steady_clock;

double best_time(const std::function<void()>& f, int reps = 5) {
  double best = 1e30;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << " first failure: " << what << ";";
    pass = pass && ok;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::printf("%s [%d] %s:%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.note.str().c_str());
  if (!o.pass) ++failures;
}

const Algorithm kPrimal[] = {Algorithm::direct, Algorithm::restricted, Algorithm::mixed, Algorithm::exact};

std::vector<corpus::Pair> equivalence_corpus() {
  std::vector<corpus::Pair> out;
  for (int k = 0; k < kEquivalencePairs; ++k) out.push_back(corpus::random_pair(1000 + k, k % 2 ? 5 : 2));
  return out;
}

void criterion_worked_example() {
  Outcome o;
  auto x = fixtures::worked_x();
  auto y = fixtures::worked_y();
  SystemStats st;
  auto qs = presentation_morphisms(x, y, &st);
  std::size_t hrank = 0;
  homotopy_reduce(qs, y, &hrank);
  o.require(st.solutions == 3, "morphism space dim " + std::to_string(st.solutions));
  o.require(hrank == 1, "homotopy rank " + std::to_string(hrank));
  double worst = 0;
  for (Algorithm a : kPrimal) {
    HomBasis b = hom(x, y, a);
    o.require(b.dim() == 1, std::string(to_string(a)) + " dim " + std::to_string(b.dim()));
    double t = best_time([&] { hom(x, y, a); });
    worst = std::max(worst, t);
    o.require(t < kWorkedExampleSeconds, std::string(to_string(a)) + " took " + std::to_string(t) + " s");
  }
  HomBasis ob = hom_oracle_basis(x, y);
  o.require(ob.dim() == 1, "oracle dim " + std::to_string(ob.dim()));
  double to = best_time([&] { hom_oracle_basis(x, y); });
  worst = std::max(worst, to);
  o.require(to < kWorkedExampleSeconds, "oracle took " + std::to_string(to) + " s");
  o.note << " dim 1 for direct/a/mixed/b/oracle, morphisms " << st.solutions << ", homotopy rank " << hrank
         << ", slowest " << worst * 1e3 << " ms";
  report(1, "worked example", o);
}

void criterion_equivalence(const std::vector<corpus::Pair>& pairs) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t elements = 0;
  for (const auto& pr : pairs) {
    const std::string tag = "seed " + std::to_string(pr.seed);
    std::vector<HomBasis> bases;
    for (Algorithm a : kPrimal) bases.push_back(hom(pr.x, pr.y, a));
    bases.push_back(hom_oracle_basis(pr.x, pr.y));
    o.require(bases.back().dim() == bases.back().stats.solutions, tag + " oracle lost rank in conversion");
    for (const auto& b : bases) {
      o.require(b.dim() == bases.front().dim(), tag + " " + std::string(to_string(b.algorithm)) + " dim differs");
      for (const auto& q : b.basis) o.require(verify_hom(q, pr.x, pr.y), tag + " unverified element");
      auto again = homotopy_reduce(b.basis, pr.y);
      o.require(again == b.basis, tag + " homotopy_reduce changed a " + std::string(to_string(b.algorithm)) + " basis");
      elements += b.dim();
    }
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < kEquivalenceSuiteSeconds, "suite took " + std::to_string(secs) + " s");
  o.note << " " << pairs.size() << " pairs over GF(2)/GF(5), " << elements << " basis elements verified, " << secs
         << " s";
  report(2, "cross-algorithm equivalence", o);
}

void criterion_bounds(const std::vector<corpus::Pair>& pairs) {
  Outcome o;
  std::size_t tight = 0;
  for (const auto& pr : pairs) {
    const std::size_t dim = hom_restricted(pr.x, pr.y).dim();
    const std::size_t b0 = static_cast<std::size_t>(pr.x.num_generators());
    const std::size_t global = b0 * static_cast<std::size_t>(thickness(pr.y));
    const std::size_t betti = b0 * static_cast<std::size_t>(betti_restricted_thickness(pr.x, pr.y));
    o.require(dim <= global, "seed " + std::to_string(pr.seed) + " exceeds b0*thick");
    o.require(dim <= betti, "seed " + std::to_string(pr.seed) + " exceeds the Betti-restricted bound");
    o.require(betti <= global, "seed " + std::to_string(pr.seed) + " Betti bound above global bound");
    tight += dim == betti;
  }
  o.note << " zero violations on " << pairs.size() << " pairs, Betti-restricted bound attained " << tight << " times";
  report(3, "dimension bounds", o);
}

void criterion_duality() {
  Outcome o;
  for (int k = 0; k < kDualityPairs; ++k) {
    corpus::Pair pr = corpus::random_pair(5000 + k, k % 2 ? 5 : 2);
    const std::string tag = "seed " + std::to_string(pr.seed);
    DualContext ctx = DualContext::build(pr.x, pr.y);
    const std::size_t a = hom_restricted(ctx.x_truncated, ctx.y_truncated).dim();
    const std::size_t b = hom_exact(ctx.x_truncated, ctx.y_truncated).dim();
    o.require(hom_dual(ctx, Algorithm::restricted).dim() == a, tag + " a-star differs from a");
    o.require(hom_dual(ctx, Algorithm::exact).dim() == b, tag + " b-star differs from b");
    o.require(a == hom_direct(pr.x, pr.y).dim(), tag + " truncation changed dim Hom");
  }
  o.note << " " << kDualityPairs << " truncated pairs, A*=A and B*=B, truncation invariant";
  report(4, "duality", o);
}

void criterion_sparsify() {
  Outcome o;
  std::size_t widest = 0, entries = 0, before = 0;
  for (int k = 0; k < kSparsifyCases; ++k) {
    RandomSpec s;
    s.seed = 7000 + k;
    s.gens = 4 + k % 10;
    s.rels = 6 + k % 12;
    s.thickness_hint = 1 + k % 4;
    s.field = k % 2 ? 5 : 2;
    Presentation p = random_module(s);
    Presentation sp = sparsify(p);
    const std::size_t thick = static_cast<std::size_t>(thickness(p));
    for (const auto& c : sp.matrix.columns()) {
      o.require(c.size() <= thick + 1, "seed " + std::to_string(s.seed) + " column too wide");
      widest = std::max(widest, c.size());
      entries += c.size();
    }
    before += p.matrix.nnz();
    std::vector<const Presentation*> both{&p, &sp};
    for (const auto& pt : evaluation_grid(both).points()) {
      o.require(oracle::hilbert(p, pt) == oracle::hilbert(sp, pt), "seed " + std::to_string(s.seed) + " Hilbert differs");
    }
  }
  o.note << " " << kSparsifyCases << " cases, widest column " << widest << ", entries " << before << " -> " << entries;
  report(5, "sparsification", o);
}

void criterion_thickness() {
  Outcome o;
  index red = thickness(parse_pmod(read_file(fixtures::path("red.pmod"))));
  index blue = thickness(parse_pmod(read_file(fixtures::path("blue.pmod"))));
  o.require(red == 1, "red thickness " + std::to_string(red));
  o.require(blue == 2, "blue thickness " + std::to_string(blue));
  o.note << " red " << red << ", blue " << blue;
  report(6, "thickness fixtures", o);
}

void criterion_ordering() {
  Outcome o;
  std::size_t sums[4] = {0, 0, 0, 0};
  index max_thick = 0, min_n = 1 << 30;
  for (int k = 0; k < kOrderingInstances; ++k) {
    Presentation x = corpus::thin_module(9000 + k, 6 + k % 5, k % 2 ? 5 : 2);
    max_thick = std::max(max_thick, thickness(x));
    min_n = std::min(min_n, x.num_generators());
    std::size_t v[4];
    const Algorithm order[4] = {Algorithm::exact, Algorithm::restricted, Algorithm::mixed, Algorithm::direct};
    for (int a = 0; a < 4; ++a) {
      v[a] = hom(x, x, order[a]).stats.variables;
      sums[a] += v[a];
    }
    o.require(v[0] < v[1] && v[1] < v[2] && v[2] < v[3],
              "instance " + std::to_string(k) + " variables " + std::to_string(v[0]) + "/" + std::to_string(v[1]) +
                  "/" + std::to_string(v[2]) + "/" + std::to_string(v[3]));
  }
  o.note << " End(X) on " << kOrderingInstances << " instances with thick <= " << max_thick << " and n >= " << min_n
         << ", total variables B " << sums[0] << " < A " << sums[1] << " < A-1/2 " << sums[2] << " < direct "
         << sums[3];
  report(7, "system-size ordering", o);
}

void criterion_hom_module() {
  Outcome o;
  Rng rng(424242);
  for (int k = 0; k < kHomModulePairs; ++k) {
    RandomSpec sx, sy;
    sx.seed = 11000 + k;
    sx.gens = 1 + k % 4;
    sx.rels = 1 + k % 5;
    sy.seed = 12000 + k;
    sy.gens = 2 + k % 4;
    sy.rels = 2 + k % 5;
    sx.field = sy.field = k % 2 ? 3 : 2;
    Presentation x = random_module(sx), y = random_module(sy);
    Presentation h = hom_module_presentation(x, y);
    const std::string tag = "pair " + std::to_string(k);
    o.require(hilbert_at(h, Degree{0, 0}) == static_cast<index>(hom_direct(x, y).dim()), tag + " at 0");
    for (int s = 0; s < kHomModuleShifts; ++s) {
      Degree a{rng.between(-4, 4), rng.between(-4, 4)};
      o.require(hilbert_at(h, a) == static_cast<index>(hom_direct(x, shift(y, a)).dim()), tag + " at " + to_string(a));
    }
  }
  o.note << " " << kHomModulePairs << " pairs at 0 and " << kHomModuleShifts << " shifts each";
  report(8, "Hom-module presentation", o);
}

void criterion_oracle() {
  Outcome o;
  std::vector<Presentation> mods;
  for (const char* name : {"worked_x.pmod", "worked_y.pmod", "box_x.pmod", "stairs_y.pmod", "red.pmod", "blue.pmod",
                           "cycle.pmod", "free_origin.pmod", "empty.pmod"}) {
    mods.push_back(parse_pmod(read_file(fixtures::path(name))));
  }
  for (int k = 0; k < 20; ++k) mods.push_back(corpus::random_pair(13000 + k, 2).y);
  std::size_t points = 0;
  for (const auto& m : mods) {
    GridModule g = realize_grid(m);
    o.require(squares_commute(g), "non-commuting square");
    for (std::size_t k = 0; k < g.grid.size(); ++k) {
      o.require(g.dim_at(k) == local_cokernel(m.matrix, g.grid.point(k)).dim(), "Hilbert mismatch");
      ++points;
    }
  }
  o.note << " " << mods.size() << " modules, " << points << " grid points";
  report(9, "oracle integrity", o);
}

}  // namespace

int main() {
  criterion_worked_example();
  auto pairs = equivalence_corpus();
  criterion_equivalence(pairs);
  criterion_bounds(pairs);
  criterion_duality();
  criterion_sparsify();
  criterion_thickness();
  criterion_ordering();
  criterion_hom_module();
  criterion_oracle();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
