#include <doctest.h>

#include "grhom/errors.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"
#include "grhom/random.hpp"
#include "support/fixtures.hpp"
#include "support/module_oracle.hpp"

using namespace grhom;

namespace {

Presentation sample(std::uint64_t seed, std::uint32_t p, int gens, int rels, int hint = 2,
                    std::size_t d = 2) {
  RandomSpec s;
  s.seed = seed;
  s.d = d;
  s.gens = gens;
  s.rels = rels;
  s.thickness_hint = hint;
  s.field = p;
  s.coord_range = d == 2 ? 8 : 4;
  return random_module(s);
}

GradedMatrix random_graded(std::uint64_t seed, std::uint32_t p, int rows, int cols, std::size_t d = 2) {
  Rng rng(seed);
  PrimeField f(p);
  std::vector<Degree> r, c;
  for (int i = 0; i < rows; ++i) {
    std::vector<int> x(d);
    for (auto& v : x) v = rng.between(0, 4);
    r.emplace_back(x);
  }
  std::vector<SparseColumn> columns;
  for (int j = 0; j < cols; ++j) {
    std::vector<int> x(d);
    for (auto& v : x) v = rng.between(0, 7);
    c.emplace_back(x);
    std::vector<Entry> e;
    for (int i = 0; i < rows; ++i) {
      if (leq(r[i], c.back()) && rng.chance(1, 2)) e.push_back({i, static_cast<coeff>(rng.between(1, p - 1))});
    }
    columns.push_back(make_column(std::move(e), f));
  }
  return GradedMatrix(f, d, r, c, columns);
}

void check_same_hilbert(const Presentation& a, const Presentation& b) {
  std::vector<const Presentation*> both{&a, &b};
  for (const auto& pt : evaluation_grid(both).points()) {
    CHECK(oracle::hilbert(a, pt) == oracle::hilbert(b, pt));
  }
}

int rank_at(const GradedMatrix& k, const Degree& alpha) {
  std::vector<SparseColumn> cols;
  for (index j = 0; j < k.num_cols(); ++j) {
    if (leq(k.col_degree(j), alpha)) cols.push_back(k.column(j));
  }
  return column_reduce(cols, k.num_rows(), k.field()).rank;
}

void check_kernel(const GradedMatrix& m, const GradedMatrix& k) {
  CHECK(k.row_degrees() == m.col_degrees());
  CHECK(multiply(m, k).nnz() == 0);
  Presentation pm(m), pk(k);
  std::vector<const Presentation*> both{&pm, &pk};
  const long long p = m.field().characteristic();
  for (const auto& a : evaluation_grid(both).points()) {
    std::vector<int> cols;
    oracle::Mat s = oracle::slice(m, a, nullptr, &cols);
    int rank = s.empty() || cols.empty() ? 0 : oracle::rank(s, p);
    CHECK(rank_at(k, a) == static_cast<int>(cols.size()) - rank);
  }
}

}  // namespace

TEST_CASE("minimize removes a duplicate relation") {
  auto y = fixtures::worked_y();
  auto rows = y.matrix.row_degrees();
  auto cols = y.matrix.col_degrees();
  auto entries = y.matrix.columns();
  cols.push_back(cols[0]);
  entries.push_back(entries[0]);
  Presentation wide(GradedMatrix(y.field(), 2, rows, cols, entries));
  Presentation m = minimize(wide);
  CHECK(m.minimal);
  CHECK(m.num_generators() == 2);
  CHECK(m.num_relations() == 3);
  CHECK(minimize(y).matrix == y.matrix);
}

TEST_CASE("minimize cancels a unit between equal degrees") {
  PrimeField f(5);
  Presentation p(GradedMatrix(f, 2, {Degree{0, 0}, Degree{1, 1}}, {Degree{1, 1}, Degree{2, 3}},
                              {{{0, 3}, {1, 2}}, {{1, 1}}}));
  Presentation m = minimize(p);
  CHECK(m.num_generators() == 1);
  CHECK(m.num_relations() == 1);
  check_same_hilbert(p, m);
}

TEST_CASE("minimize preserves the Hilbert function and is idempotent") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    PrimeField f(seed % 2 ? 2 : 5);
    GradedMatrix g = random_graded(seed, f.characteristic(), 12, 15);
    Presentation raw(g);
    Presentation m = minimize(raw);
    check_same_hilbert(raw, m);
    CHECK(minimize(m).matrix == m.matrix);
    for (index j = 0; j < m.num_relations(); ++j) {
      for (const auto& e : m.matrix.column(j)) CHECK(m.matrix.row_degree(e.row) != m.matrix.col_degree(j));
    }
  }
}

TEST_CASE("kernel basics") {
  auto x = fixtures::worked_x();
  CHECK(kernel(x.matrix).num_cols() == 0);
  PrimeField f(3);
  GradedMatrix twin(f, 2, {Degree{0, 0}}, {Degree{1, 2}, Degree{1, 2}}, {{{0, 1}}, {{0, 1}}});
  GradedMatrix k = kernel(twin);
  REQUIRE(k.num_cols() == 1);
  CHECK(k.col_degree(0) == Degree{1, 2});
  check_kernel(twin, k);
}

TEST_CASE("kernels agree with degree-wise nullspaces") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    std::uint32_t p = seed % 2 ? 2 : 5;
    GradedMatrix m = random_graded(seed * 13, p, 6, 8);
    GradedMatrix kb = kernel_bivariate(m);
    GradedMatrix kg = kernel_general(m);
    check_kernel(m, kb);
    check_kernel(m, kg);
    // Both are minimal generating sets, so the degree multisets agree.
    auto a = kb.col_degrees(), b = kg.col_degrees();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GradedMatrix m = random_graded(seed * 7, 3, 4, 6, 3);
    check_kernel(m, kernel(m));
  }
}

TEST_CASE("free resolutions") {
  auto x = fixtures::worked_x();
  CHECK(free_resolution(x, 3).length() == 1);
  auto y = fixtures::worked_y();
  Resolution r = free_resolution(y, 3);
  REQUIRE(r.length() == 2);
  CHECK(r.maps[1].num_cols() == 1);
  CHECK(multiply(r.maps[0], r.maps[1]).nnz() == 0);
  Presentation free = Presentation::free(PrimeField(2), 2, {Degree{0, 0}});
  CHECK(free_resolution(free, 2).empty());

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Presentation p = sample(seed, 2, 6, 9);
    Resolution res = free_resolution(p, 5);
    CHECK(res.length() <= 2);
    for (std::size_t k = 0; k + 1 < res.length(); ++k) {
      CHECK(res.maps[k + 1].row_degrees() == res.maps[k].col_degrees());
      CHECK(multiply(res.maps[k], res.maps[k + 1]).nnz() == 0);
    }
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Presentation p = sample(seed, 2, 3, 5, 1, 3);
    CHECK(free_resolution(p, 5).length() <= 3);
  }
}

TEST_CASE("truncation") {
  Presentation free = Presentation::free(PrimeField(2), 2, {Degree{0, 0}});
  Presentation t = truncate(free, Degree{3, 3});
  CHECK(t.num_generators() == 1);
  REQUIRE(t.num_relations() == 2);
  CHECK(t.relations()[0] == Degree{3, 0});
  CHECK(t.relations()[1] == Degree{0, 3});
  CHECK_THROWS_AS(truncate(fixtures::worked_x(), Degree{3, 3}), PreconditionError);

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Presentation p = sample(seed, 5, 5, 6);
    const Presentation* ps[] = {&p};
    Degree w = default_truncation_bound(ps);
    Presentation once = truncate(p, w);
    Presentation twice = truncate(once, w);
    check_same_hilbert(once, twice);
    // The truncation agrees with X strictly below omega and vanishes elsewhere.
    for (const auto& a : evaluation_grid(once).points()) {
      bool below = a[0] < w[0] && a[1] < w[1];
      CHECK(oracle::hilbert(once, a) == (below ? oracle::hilbert(p, a) : 0));
    }
  }
}

TEST_CASE("matlis transpose shift") {
  PrimeField f(3);
  GradedMatrix m(f, 2, {Degree{2, 2}}, {Degree{6, 2}}, {{{0, 1}}});
  GradedMatrix t = matlis_transpose_shift(m);
  CHECK(t.row_degree(0) == Degree{-5, -1});
  CHECK(t.col_degree(0) == Degree{-1, -1});
  CHECK(t.at(0, 0) == 1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GradedMatrix g = random_graded(seed, 5, 5, 7);
    GradedMatrix tt = matlis_transpose_shift(g);
    CHECK(validate_grading(tt));
    CHECK(matlis_transpose_shift(tt) == g);
  }
}

TEST_CASE("sparsify bounds column support by thickness plus one") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Presentation p = sample(seed, seed % 2 ? 2 : 5, 8, 12, 1 + seed % 4);
    Presentation s = sparsify(p);
    const index thick = thickness(p);
    for (const auto& c : s.matrix.columns()) CHECK(static_cast<index>(c.size()) <= thick + 1);
    CHECK(s.num_relations() == p.num_relations());
    check_same_hilbert(p, s);
    CHECK(minimize(s).matrix.num_cols() == s.num_relations());
  }
}

TEST_CASE("shift moves every degree") {
  auto y = fixtures::worked_y();
  Presentation s = shift(y, Degree{1, 1});
  CHECK(s.generators()[0] == Degree{-1, 0});
  CHECK(hilbert_at(s, Degree{1, 1}) == hilbert_at(y, Degree{2, 2}));
}
