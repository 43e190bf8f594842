// Python bindings: presentations as opaque objects, degrees as int tuples,
// matrix columns as lists of (row, coefficient) pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grhom/dual_hom.hpp"
#include "grhom/errors.hpp"
#include "grhom/grid_oracle.hpp"
#include "grhom/hom.hpp"
#include "grhom/io.hpp"
#include "grhom/local_structure.hpp"
#include "grhom/presentation_ops.hpp"
#include "grhom/random.hpp"

namespace py = pybind11;
using namespace grhom;

namespace {

using PyDegree = std::vector<int>;
using PyColumn = std::vector<std::pair<grhom::index, grhom::coeff>>;

PyDegree to_py(const Degree& a) { return PyDegree(a.coords().begin(), a.coords().end()); }

std::vector<PyDegree> to_py(const std::vector<Degree>& ds) {
  std::vector<PyDegree> out;
  for (const auto& a : ds) out.push_back(to_py(a));
  return out;
}

std::vector<Degree> from_py(const std::vector<PyDegree>& ds) {
  std::vector<Degree> out;
  for (const auto& a : ds) out.emplace_back(a);
  return out;
}

std::vector<PyColumn> columns_of(const GradedMatrix& m) {
  std::vector<PyColumn> out;
  for (const auto& c : m.columns()) {
    PyColumn col;
    for (const auto& e : c) col.emplace_back(e.row, e.value);
    out.push_back(std::move(col));
  }
  return out;
}

GradedMatrix matrix_from(std::uint32_t p, const std::vector<PyDegree>& rows, const std::vector<PyDegree>& cols,
                         const std::vector<PyColumn>& entries) {
  if (entries.size() != cols.size()) throw DimensionMismatch("one entry list per column is required");
  std::size_t d = !rows.empty() ? rows.front().size() : !cols.empty() ? cols.front().size() : 0;
  PrimeField f(p);
  std::vector<SparseColumn> columns;
  for (const auto& c : entries) {
    std::vector<Entry> es;
    for (auto [r, v] : c) es.push_back({r, v});
    columns.push_back(make_column(std::move(es), f));
  }
  return GradedMatrix(f, d, from_py(rows), from_py(cols), std::move(columns));
}

py::dict stats_dict(const SystemStats& s) {
  py::dict d;
  d["variables"] = s.variables;
  d["equations"] = s.equations;
  d["entries"] = s.entries;
  d["solutions"] = s.solutions;
  d["homotopy_rank"] = s.homotopy_rank;
  d["seconds"] = s.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homomorphisms between multiparameter persistence modules";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<GradingError>(m, "GradingError", error);
  py::register_exception<FieldError>(m, "FieldError", error);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);
  py::register_exception<PreconditionError>(m, "PreconditionError", error);
  py::register_exception<ResourceError>(m, "ResourceError", error);
  py::register_exception<FileError>(m, "FileError", error);

  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](std::uint32_t p, const std::vector<PyDegree>& gens, const std::vector<PyDegree>& rels,
                       const std::vector<PyColumn>& columns) {
             return Presentation(matrix_from(p, gens, rels, columns));
           }),
           py::arg("field"), py::arg("generators"), py::arg("relations"), py::arg("columns"))
      .def_property_readonly("field", [](const Presentation& p) { return p.field().characteristic(); })
      .def_property_readonly("dim", &Presentation::dim)
      .def_property_readonly("generators", [](const Presentation& p) { return to_py(p.generators()); })
      .def_property_readonly("relations", [](const Presentation& p) { return to_py(p.relations()); })
      .def_property_readonly("columns", [](const Presentation& p) { return columns_of(p.matrix); })
      .def_readonly("minimal", &Presentation::minimal)
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a.matrix == b.matrix; })
      .def("__repr__", [](const Presentation& p) {
        return "<Presentation d=" + std::to_string(p.dim()) + " gens=" + std::to_string(p.num_generators()) +
               " rels=" + std::to_string(p.num_relations()) + " GF(" +
               std::to_string(p.field().characteristic()) + ")>";
      });

  py::class_<HomBasis>(m, "HomBasis")
      .def_property_readonly("dim", &HomBasis::dim)
      .def_property_readonly("algorithm", [](const HomBasis& b) { return std::string(to_string(b.algorithm)); })
      .def_property_readonly("coords", [](const HomBasis& b) { return std::string(to_string(b.coords)); })
      .def_property_readonly("stats", [](const HomBasis& b) { return stats_dict(b.stats); })
      .def_property_readonly("matrices", [](const HomBasis& b) {
        std::vector<std::vector<PyColumn>> out;
        for (const auto& q : b.basis) out.push_back(columns_of(q));
        return out;
      });

  m.def("parse", [](const std::string& text, std::optional<std::uint32_t> field) {
    return parse_presentation(text, field);
  }, py::arg("text"), py::arg("field") = py::none(), "Parse pmod or firep text.");
  m.def("load", [](const std::string& path, std::optional<std::uint32_t> field) {
    return parse_presentation(read_file(path), field);
  }, py::arg("path"), py::arg("field") = py::none());
  m.def("dumps", &serialize_pmod, "Serialize to pmod text.");
  m.def("dumps_hom", [](const HomBasis& b, const Presentation& x) {
    return serialize_hom_basis(b, x.dim(), x.field().characteristic());
  });

  m.def("minimize", &minimize);
  m.def("sparsify", &sparsify);
  m.def("truncate", [](const Presentation& p, const PyDegree& w) { return truncate(p, Degree(w)); });
  m.def("shift", [](const Presentation& p, const PyDegree& a) { return shift(p, Degree(a)); });
  m.def("resolution", [](const Presentation& p, std::size_t length) {
    std::vector<Presentation> out;
    for (auto& mtx : free_resolution(p, length).maps) out.emplace_back(std::move(mtx));
    return out;
  }, py::arg("presentation"), py::arg("length") = 2, "Differentials d_1, d_2, ... as presentations.");

  m.def("hilbert", [](const Presentation& p, const PyDegree& a) { return hilbert_at(p, Degree(a)); });
  m.def("thickness", [](const Presentation& p) { return thickness(p); });
  m.def("betti_restricted_thickness", &betti_restricted_thickness);
  m.def("random_module", [](std::uint64_t seed, std::size_t d, int gens, int rels, int range, int hint,
                            std::uint32_t field) {
    return random_module(RandomSpec{seed, d, gens, rels, range, hint, field});
  }, py::arg("seed"), py::arg("d") = 2, py::arg("gens") = 4, py::arg("rels") = 4, py::arg("coord_range") = 8,
     py::arg("thickness_hint") = 1, py::arg("field") = 2);

  m.def("hom", [](const Presentation& x, const Presentation& y, const std::string& alg, std::size_t grid_cap) {
    auto parsed = algorithm_from_string(alg);
    if (!parsed) throw py::value_error("unknown algorithm '" + alg + "'");
    const Algorithm a = *parsed;
    if (a == Algorithm::oracle) return hom_oracle_basis(x, y, grid_cap);
    py::gil_scoped_release release;
    return hom(x, y, a);
  }, py::arg("x"), py::arg("y"), py::arg("algorithm") = "a", py::arg("grid_cap") = default_grid_cap,
     "Basis of Hom(X, Y); algorithm is one of direct, a, mixed, b, a-star, b-star, oracle.");
  m.def("verify_hom", [](const HomBasis& b, const Presentation& x, const Presentation& y) {
    if (b.coords != Coords::generators) throw PreconditionError("verification needs generator coordinates");
    for (const auto& q : b.basis)
      if (!verify_hom(q, x, y)) return false;
    return true;
  });
  m.def("hom_module", &hom_module_presentation, "Presentation of the graded module Hom(X, Y).");
  m.def("squares_commute", [](const Presentation& p, std::size_t cap) { return squares_commute(realize_grid(p, cap)); },
        py::arg("presentation"), py::arg("grid_cap") = default_grid_cap);
}
