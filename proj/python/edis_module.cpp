#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edis/analysis.hpp"
#include "edis/arith.hpp"
#include "edis/canonical.hpp"
#include "edis/congruence.hpp"
#include "edis/constructions.hpp"
#include "edis/enumeration.hpp"
#include "edis/errors.hpp"
#include "edis/graph_inverse.hpp"
#include "edis/io.hpp"
#include "edis/qsemigroup.hpp"

namespace py = pybind11;
using namespace edis;

namespace {

std::vector<std::vector<int>> table_rows(FiniteInverseSemigroup const& s) {
  std::vector<std::vector<int>> rows(s.order(), std::vector<int>(s.order()));
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      rows[a][b] = s.product(a, b);
    }
  }
  return rows;
}

GraphSpec graph_from_py(int vertices,
                        std::vector<std::pair<int, int>> const& edges) {
  GraphSpec g;
  g.vertices = vertices;
  g.edges    = edges;
  return g;
}

}  // namespace

PYBIND11_MODULE(edis, m) {
  m.doc() = "finite inverse semigroups: E-disjunctivity, congruences,"
            " constructions, census, Q-theorem reconstruction";

  py::register_exception<Error>(m, "EdisError");

  py::class_<FiniteInverseSemigroup>(m, "InverseSemigroup")
      .def_property_readonly("order", &FiniteInverseSemigroup::order)
      .def("product", &FiniteInverseSemigroup::product)
      .def("inverse", &FiniteInverseSemigroup::inverse)
      .def("is_idempotent", &FiniteInverseSemigroup::is_idempotent)
      .def("idempotents", &FiniteInverseSemigroup::idempotents)
      .def("natural_leq", &FiniteInverseSemigroup::natural_leq)
      .def("is_semilattice", &FiniteInverseSemigroup::is_semilattice)
      .def("is_group", &FiniteInverseSemigroup::is_group)
      .def("has_identity", &FiniteInverseSemigroup::has_identity)
      .def("has_zero", &FiniteInverseSemigroup::has_zero)
      .def("table", &table_rows)
      .def("__len__", &FiniteInverseSemigroup::order)
      .def("__repr__", [](FiniteInverseSemigroup const& s) {
        return "<InverseSemigroup of order " + std::to_string(s.order()) + ">";
      });

  m.def("from_table", &semigroup_from_table, py::arg("table"),
        "validate a multiplication table and build the semigroup");
  m.def("builder", &build_named, py::arg("spec"),
        "builder mini-language, e.g. 'monogenic:2,2' or 'symmetric:3'");

  m.def("is_e_disjunctive", &is_E_disjunctive);
  m.def("is_e_unitary", &is_E_unitary);
  m.def("syntactic_classes", [](FiniteInverseSemigroup const& s) {
    return syntactic_congruence(s).classes();
  });
  m.def("max_e_disjunctive_quotient", [](FiniteInverseSemigroup const& s) {
    auto q = max_E_disjunctive_quotient(s);
    return py::make_tuple(q.semigroup, q.hom);
  });
  m.def("is_isomorphic", [](FiniteInverseSemigroup const& a,
                            FiniteInverseSemigroup const& b) {
    return is_isomorphic(a, b);
  });

  m.def(
      "monogenic",
      [](int n, int k) { return monogenic(n, k).semigroup; },
      py::arg("n"), py::arg("k"));
  m.def("symmetric_inverse_monoid",
        [](int n) { return symmetric_inverse_monoid(n).semigroup; });
  m.def("dual_symmetric_inverse_monoid",
        [](int n) { return dual_symmetric_inverse_monoid(n).semigroup; });
  m.def("clifford_extremal", &clifford_extremal);
  m.def("minimal_example_11", [] { return minimal_example_11().s; });
  m.def("cyclic_group", &cyclic_group);
  m.def("direct_product", &direct_product);
  m.def("adjoin_identity", &adjoin_identity);
  m.def("adjoin_zero", &adjoin_zero);

  m.def("enumerate_inverse_semigroups", [](int n) {
    std::vector<FiniteInverseSemigroup> out;
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      out.push_back(semigroup_from_flat_table(n, t));
    }
    return out;
  }, py::arg("n"), "all inverse semigroups of order n up to isomorphism");

  m.def("census_row", [](int n, int jobs) {
    auto r = classify_order(n, jobs);
    py::dict d;
    d["order"]                     = r.order;
    d["inverse_semigroups"]        = r.total;
    d["e_unitary_non_semilattice"] = r.e_unitary_non_semilattice;
    d["e_disjunctive"]             = r.e_disjunctive;
    d["e_disjunctive_monoids"]     = r.e_disjunctive_monoids;
    return d;
  }, py::arg("n"), py::arg("jobs") = 1);

  m.def("reconstruct", [](FiniteInverseSemigroup const& s) {
    auto r = reconstruct(s);
    py::dict d;
    d["verified"]       = r.verified;
    d["quotient_order"] = r.quotient_order;
    d["x_size"]         = r.x_size;
    d["order"]          = s.order();
    return d;
  });

  m.def("gis_order", [](int vertices,
                        std::vector<std::pair<int, int>> const& edges) {
    return gis(graph_from_py(vertices, edges)).semigroup.order();
  });
  m.def("gis_is_e_disjunctive",
        [](int vertices, std::vector<std::pair<int, int>> const& edges) {
          return gis_is_E_disjunctive(graph_from_py(vertices, edges));
        });

  m.def("arith_mul",
        [](std::vector<std::int64_t> const& x,
           std::vector<std::int64_t> const& y)
            -> std::optional<std::vector<std::int64_t>> {
          auto z = arith_mul(ArithElement::make(x.at(0), x.at(1), x.at(2),
                                                x.at(3)),
                             ArithElement::make(y.at(0), y.at(1), y.at(2),
                                                y.at(3)));
          if (z.zero) {
            return std::nullopt;
          }
          return std::vector<std::int64_t>{z.a, z.b, z.c, z.d};
        });
  m.def("arith_verify", [](std::int64_t max_param, std::int64_t truncate) {
    auto rep = arith_verify(max_param, truncate);
    return py::make_tuple(rep.pairs, rep.mismatches);
  });
}
