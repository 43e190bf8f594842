#include <doctest.h>

#include <sstream>

#include "grhom/bench.hpp"
#include "grhom/errors.hpp"
#include "grhom/hom.hpp"
#include "grhom/io.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/random.hpp"
#include "support/fixtures.hpp"

using namespace grhom;

namespace {

ParseErrorKind kind_of(const std::string& text) {
  try {
    parse_pmod(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no parse error for:\n" << text);
  return ParseErrorKind::malformed;
}

}  // namespace

TEST_CASE("pmod fixture parses to the printed matrix") {
  Presentation y = parse_pmod(read_file(fixtures::path("worked_y.pmod")));
  CHECK(y.matrix == fixtures::worked_y().matrix);
  CHECK(y.matrix.at(1, 0) == 2);
  Presentation x = parse_pmod(read_file(fixtures::path("worked_x.pmod")));
  CHECK(x.matrix == fixtures::worked_x().matrix);
  Presentation e = parse_pmod(read_file(fixtures::path("empty.pmod")));
  CHECK(e.num_generators() == 0);
  CHECK(e.num_relations() == 0);
}

TEST_CASE("negative literals reduce mod p and serialize canonically") {
  Presentation p = parse_pmod("pmod 2 3\ngens 2\n0 1\n1 0\nrels 2\n2 2 ; 0:1 1:-1\n5 0 ;\n");
  CHECK(p.matrix.at(1, 0) == 2);
  CHECK(serialize_pmod(p) == "pmod 2 3\ngens 2\n0 1\n1 0\nrels 2\n2 2 ; 0:1 1:2\n5 0 ;\n");
}

TEST_CASE("serialize and parse round-trip byte for byte") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomSpec s;
    s.seed = seed;
    s.d = 1 + seed % 3;
    s.gens = static_cast<int>(seed % 9);
    s.rels = static_cast<int>(seed % 11);
    s.field = seed % 2 ? 2 : 7;
    std::string text = serialize_pmod(random_module(s));
    CHECK(serialize_pmod(parse_pmod(text)) == text);
  }
}

TEST_CASE("parse errors are named distinctly") {
  CHECK(kind_of("pmod 2 4\ngens 0\nrels 0\n") == ParseErrorKind::bad_header);
  CHECK(kind_of("pmodx 2 3\ngens 0\nrels 0\n") == ParseErrorKind::bad_header);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 1 2\nrels 0\n") == ParseErrorKind::bad_degree_arity);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 1\nrels 1\n1 1 ; 0:3\n") == ParseErrorKind::coeff_out_of_range);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 1\nrels 1\n1 1 ; 0:0\n") == ParseErrorKind::coeff_out_of_range);
  CHECK(kind_of("pmod 2 3\ngens 2\n0 1\n0 0\nrels 1\n1 1 ; 1:1 0:1\n") == ParseErrorKind::unsorted_rows);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 1\nrels 1\n1 1 ; 1:1\n") == ParseErrorKind::row_out_of_range);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 1\nrels 1\n1 0 ; 0:1\n") == ParseErrorKind::grading_violation);
  CHECK(kind_of("pmod 2 3\ngens 2\n0 1\nrels 0\n") == ParseErrorKind::count_mismatch);
  CHECK(kind_of("pmod 2 3\ngens 0\nrels 0\n1 1 ;\n") == ParseErrorKind::count_mismatch);
  CHECK(kind_of("pmod 0 3\ngens 0\nrels 0\n") == ParseErrorKind::unsupported_dimension);
  CHECK(kind_of("pmod 2 3\ngens 1\n0 x\nrels 0\n") == ParseErrorKind::malformed);
  try {
    parse_pmod("pmod 2 3\ngens 1\n0 1\nrels 1\n1 1 ; 0:1 0:2\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 11);
  }
}

TEST_CASE("firep import") {
  Presentation y = parse_firep(read_file(fixtures::path("worked_y.firep")), 3);
  CHECK(y.matrix == fixtures::worked_y().matrix);
  Presentation c = parse_firep(read_file(fixtures::path("cycle.firep")), 2);
  CHECK(serialize_pmod(c) == read_file(fixtures::path("cycle.pmod")));
  Presentation f = parse_presentation(read_file(fixtures::path("free_two.firep")), 5);
  CHECK(f.num_generators() == 2);
  CHECK(f.num_relations() == 0);
  CHECK(f.field().characteristic() == 5);
  CHECK_THROWS_AS(parse_firep("firep\nx\ny\n0 1 0\n0.5 1 ;\n", 2), ParseError);
  try {
    parse_firep("firep\nx\ny\n0 1 0\n0.5 1 ;\n", 2);
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::non_integer_grade);
  }
  try {
    parse_firep("firep\nx\ny\n0 1 0\n0 1 2 ;\n", 2);
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::bad_degree_arity);
  }
  CHECK_THROWS_AS(parse_presentation(read_file(fixtures::path("worked_y.pmod")), 5), FieldError);
}

TEST_CASE("hom basis files round-trip") {
  auto x = fixtures::worked_x();
  auto y = fixtures::worked_y();
  for (Algorithm a : {Algorithm::direct, Algorithm::exact, Algorithm::exact_dual}) {
    HomBasis b = hom(x, y, a);
    std::string text = serialize_hom_basis(b, 2, 3);
    HomBasis back = parse_hom_basis(text);
    CHECK(back.dim() == b.dim());
    CHECK(back.coords == b.coords);
    CHECK(back.algorithm == b.algorithm);
    CHECK(serialize_hom_basis(back, 2, 3) == text);
  }
  std::string text = serialize_hom_basis(hom_direct(x, y), 2, 3);
  CHECK(text.rfind("homs 2 3\ndim 1\ncoords generators\nalg direct\n", 0) == 0);
}

TEST_CASE("random modules are deterministic and minimal") {
  RandomSpec s;
  s.seed = 42;
  s.gens = 9;
  s.rels = 12;
  CHECK(serialize_pmod(random_module(s)) == serialize_pmod(random_module(s)));
  RandomSpec t = s;
  t.gens = 1;
  t.rels = 0;
  Presentation f = random_module(t);
  CHECK(f.num_generators() == 1);
  CHECK(f.num_relations() == 0);
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.below(17) == b.below(17));
}

TEST_CASE("bench output is ordered and deterministic up to timings") {
  BenchConfig c;
  c.module.gens = 5;
  c.module.rels = 6;
  c.count = 6;
  c.jobs = 3;
  std::ostringstream a, b;
  run_bench(c, a);
  c.jobs = 1;
  run_bench(c, b);
  auto strip = [](const std::string& s) {
    std::istringstream in(s);
    std::string out, line;
    while (std::getline(in, line)) {
      std::vector<std::string> f;
      std::stringstream ls(line);
      for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
      if (f.size() > 5) f[5] = "";
      for (auto& x : f) out += x + ",";
      out += "\n";
    }
    return out;
  };
  CHECK(strip(a.str()) == strip(b.str()));
  CHECK(a.str().rfind(bench_csv_header(), 0) == 0);
}
