#include <doctest.h>

#include "grhom/errors.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"
#include "grhom/random.hpp"
#include "support/fixtures.hpp"
#include "support/module_oracle.hpp"

using namespace grhom;

namespace {

Presentation sample(std::uint64_t seed, std::uint32_t p = 2, int hint = 2) {
  RandomSpec s;
  s.seed = seed;
  s.gens = 5;
  s.rels = 7;
  s.thickness_hint = hint;
  s.field = p;
  return random_module(s);
}

}  // namespace

TEST_CASE("local cokernel of the running example") {
  auto y = fixtures::worked_y();
  LocalCokernel lc = local_cokernel(y.matrix, Degree{2, 2});
  CHECK(lc.dim() == 1);
  CHECK(lc.basis == std::vector<index>{0});
  CHECK(lc.domain == std::vector<index>{0, 1});
  // a - b = 0, so both generators map to the same basis vector.
  CHECK(lc.map(0, 0) == 1);
  CHECK(lc.map(0, 1) == 1);

  CHECK(local_cokernel(y.matrix, Degree{-1, 0}).dim() == 0);
  CHECK(local_cokernel(y.matrix, Degree{1, 1}).dim() == 2);
  CHECK(local_cokernel(y.matrix, Degree{6, 2}).dim() == 0);
  CHECK(local_cokernel(y.matrix, Degree{5, 0}).dim() == 0);
  CHECK(local_cokernel(y.matrix, Degree{4, 9}).dim() == 1);
}

TEST_CASE("free module has identity local cokernels") {
  Presentation f = Presentation::free(PrimeField(5), 2, {Degree{0, 0}, Degree{1, 0}, Degree{0, 0}});
  LocalCokernel lc = local_cokernel(f.matrix, Degree{1, 1});
  CHECK(lc.dim() == 3);
  CHECK(lc.map == DenseMatrix::identity(3));
  CHECK(thickness(f) == 3);
}

TEST_CASE("local cokernel invariants on random modules") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Presentation y = sample(seed, seed % 2 ? 2 : 5);
    const PrimeField& f = y.field();
    for (const Degree& a : evaluation_grid(y).points()) {
      LocalCokernel lc = local_cokernel(y.matrix, a);
      CHECK(lc.dim() == oracle::hilbert(y, a));
      // d_alpha kills every relation below alpha.
      for (index j = 0; j < y.num_relations(); ++j) {
        if (!leq(y.matrix.col_degree(j), a)) continue;
        for (coeff v : lc.apply(y.matrix.column(j), f)) CHECK(v == 0);
      }
      for (index k = 0; k < lc.dim(); ++k) {
        auto img = lc.image_of_row(lc.basis[k]);
        for (index r = 0; r < lc.dim(); ++r) CHECK(img[r] == (r == k ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("structure maps") {
  auto y = fixtures::worked_y();
  CHECK(structure_map(y.matrix, Degree{2, 2}, Degree{2, 2}) == DenseMatrix::identity(1));
  // Both generators are dead at (6,2): the generator at (2,2) does not survive.
  DenseMatrix m = structure_map(y.matrix, Degree{2, 2}, Degree{6, 2});
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 1);
  DenseMatrix up = structure_map(y.matrix, Degree{2, 2}, Degree{4, 9});
  CHECK(up.rows() == 1);
  CHECK(up(0, 0) == 1);
  CHECK_THROWS_AS(structure_map(y.matrix, Degree{2, 2}, Degree{1, 5}), PreconditionError);

  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    Presentation p = sample(seed, 5);
    auto pts = evaluation_grid(p).points();
    CokernelCache cache(p.matrix);
    for (std::size_t i = 0; i < pts.size(); i += 3) {
      for (std::size_t j = 0; j < pts.size(); j += 5) {
        if (!leq(pts[i], pts[j])) continue;
        Degree c = join(pts[j], Degree{pts[j][0] + 1, pts[j][1]});
        DenseMatrix ab = structure_map(p.matrix, pts[i], pts[j], &cache);
        DenseMatrix bc = structure_map(p.matrix, pts[j], c, &cache);
        DenseMatrix ac = structure_map(p.matrix, pts[i], c, &cache);
        CHECK(multiply(bc, ab, p.field()) == ac);
      }
    }
  }
}

TEST_CASE("thickness of the two-module fixtures") {
  CHECK(thickness(fixtures::worked_x()) == 1);
  CHECK(thickness(fixtures::worked_y()) == 2);
}

TEST_CASE("thickness on the evaluation grid equals the max over every integer point") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    Presentation p = sample(seed, 2, 1 + seed % 3);
    int best = 0;
    for (const auto& a : oracle::integer_box(p.matrix)) best = std::max(best, oracle::hilbert(p, a));
    CHECK(thickness(p) == best);
  }
}

TEST_CASE("restriction systems") {
  auto x = fixtures::worked_x();
  auto y = fixtures::worked_y();
  RestrictionSystem rs = restriction_system(x, y.matrix, 0);
  REQUIRE(rs.subsets.size() == 1);
  CHECK(rs.subsets[0].size() == 1);

  Presentation empty = Presentation::zero(PrimeField(3), 2);
  CHECK(restriction_system(empty, y.matrix, 0).subsets.empty());
  CHECK_THROWS_AS(restriction_system(x, y.matrix, 2), PreconditionError);
}

TEST_CASE("stage-one restriction on the scaled square example") {
  PrimeField f(2);
  Presentation y(GradedMatrix(f, 2, {Degree{4, 0}, Degree{0, 4}},
                              {Degree{4, 4}, Degree{0, 20}, Degree{5, 15}, Degree{10, 10},
                               Degree{15, 5}, Degree{20, 0}},
                              {{{0, 1}, {1, 1}}, {{1, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}}),
                 true);
  Presentation x(GradedMatrix(f, 2, {Degree{5, 5}}, {Degree{20, 20}}, {{{0, 1}}}), true);
  GradedMatrix o = kernel(y.matrix);
  CHECK(o.num_rows() == 6);
  RestrictionSystem rs = restriction_system(x, o, 1);
  REQUIRE(rs.subsets.size() == 1);
  CHECK(rs.subsets[0].size() == 2);
}
