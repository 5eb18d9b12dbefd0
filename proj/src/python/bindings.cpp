#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torsionlab/algebra.hpp"
#include "torsionlab/catalan.hpp"
#include "torsionlab/lattice.hpp"
#include "torsionlab/poset.hpp"
#include "torsionlab/serialize.hpp"
#include "torsionlab/specs.hpp"
#include "torsionlab/torsion.hpp"

namespace py = pybind11;
using namespace torsionlab;

namespace {

std::vector<std::vector<std::int64_t>> matrix_rows(const Matrix& m) { return m.to_rows(); }

OmegaRoute route_of(const std::string& s) {
  if (s == "ext") return OmegaRoute::ext;
  if (s == "syzygy") return OmegaRoute::syzygy;
  if (s == "cosyzygy") return OmegaRoute::cosyzygy;
  throw py::value_error("route must be ext, syzygy or cosyzygy");
}

}  // namespace

PYBIND11_MODULE(torsionlab, m) {
  m.doc() = "Torsion pairs, omega-torsion pairs and Catalan lattices over F_p";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotInCatalog>(m, "NotInCatalog", PyExc_RuntimeError);
  py::register_exception<VerificationFailed>(m, "VerificationFailed", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NotALattice>(m, "NotALattice", PyExc_ValueError);
  py::register_exception<NotAPartialOrder>(m, "NotAPartialOrder", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def_static("from_relation", &Poset::from_relation, py::arg("labels"), py::arg("leq"))
      .def_static("from_covers", &Poset::from_covers, py::arg("labels"), py::arg("covers"))
      .def("__len__", &Poset::size)
      .def("leq", &Poset::leq)
      .def_property_readonly("labels", &Poset::labels)
      .def_property_readonly("covers", &Poset::covers)
      .def("minimal_elements", &Poset::minimal_elements)
      .def("maximal_elements", &Poset::maximal_elements)
      .def("to_json", [](const Poset& p) { return poset_to_json(p).dump(); })
      .def("to_dot", [](const Poset& p) { return poset_to_dot(p); })
      .def("__eq__", &Poset::operator==);

  m.def("interval_poset", &interval_poset, py::arg("n"));
  m.def("opposite", &opposite);
  m.def("antichain", &antichain);
  m.def("chain", &chain);
  m.def("poset_from_json", [](const std::string& s) { return poset_from_json(json::parse(s)); });
  m.def("order_ideals", [](const Poset& p) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& i : order_ideals(p)) out.push_back(members(i.members));
    return out;
  });
  m.def("poset_isomorphic", &poset_isomorphic);

  py::class_<FinLattice>(m, "Lattice")
      .def_static("from_order", &FinLattice::from_order)
      .def("__len__", &FinLattice::size)
      .def("leq", &FinLattice::leq)
      .def("meet", &FinLattice::meet)
      .def("join", &FinLattice::join)
      .def_property_readonly("bottom", &FinLattice::bottom)
      .def_property_readonly("top", &FinLattice::top)
      .def_property_readonly("order", &FinLattice::order)
      .def_property_readonly("covers", &FinLattice::covers)
      .def_property_readonly("labels", [](const FinLattice& l) { return l.order().labels(); })
      .def("to_json", [](const FinLattice& l) { return lattice_to_json(l).dump(); })
      .def("to_dot", [](const FinLattice& l) { return lattice_to_dot(l); });

  m.def("ideal_lattice", &ideal_lattice);
  m.def("dual", py::overload_cast<const FinLattice&>(&dual));
  m.def("is_distributive", &is_distributive);
  m.def("is_semidistributive", &is_semidistributive);
  m.def("is_join_semidistributive", &is_join_semidistributive);
  m.def("is_meet_semidistributive", &is_meet_semidistributive);
  m.def("is_congruence_uniform", &is_congruence_uniform);
  m.def("lattice_isomorphic", &lattice_isomorphic);
  m.def("forcing_poset", &forcing_poset);
  m.def("congruence_lattice", [](const FinLattice& l) {
    auto c = congruence_lattice(l);
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& x : c.congruences) blocks.push_back(x.canonical());
    return py::make_tuple(c.lattice, blocks);
  }, "Congruence lattice and, per element, the block labelling (least element of each block).");

  m.def("catalan_number", &catalan_number);
  m.def("dyck_paths", [](std::size_t n) {
    std::vector<std::string> out;
    for (const auto& d : dyck_paths(n)) out.push_back(d.str());
    return out;
  });
  m.def("dyck_lattice", &dyck_lattice);
  m.def("tamari_lattice", &tamari_lattice);
  m.def("typeA_torsion_lattice", &typeA_torsion_lattice);

  py::class_<Module>(m, "Module")
      .def_property_readonly("dims", &Module::dims)
      .def_property_readonly("total_dim", &Module::total_dim)
      .def_property_readonly("prime", &Module::prime)
      .def("action", [](const Module& x, std::size_t a) { return matrix_rows(x.action(a)); })
      .def("__eq__", &Module::operator==);

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("num_vertices", &Algebra::num_vertices)
      .def_property_readonly("vertex_labels", &Algebra::vertex_labels)
      .def_property_readonly("arrows",
                             [](const Algebra& a) {
                               std::vector<py::tuple> out;
                               for (const auto& ar : a.arrows()) {
                                 out.push_back(py::make_tuple(ar.name, ar.source, ar.target));
                               }
                               return out;
                             })
      .def_property_readonly("prime", &Algebra::prime)
      .def("dimension", &Algebra::dimension)
      .def("projective", &Algebra::projective, py::return_value_policy::copy)
      .def("injective", &Algebra::injective, py::return_value_policy::copy)
      .def("simple", &Algebra::simple)
      .def("opposite", &Algebra::opposite, py::return_value_policy::copy)
      .def("to_json", [](const Algebra& a) { return algebra_to_json(a).dump(); })
      .def("module_from_json",
           [](const Algebra& a, const std::string& s) { return module_from_json(a, json::parse(s)); })
      .def("module_to_json",
           [](const Algebra& a, const Module& x) { return module_to_json(a, x).dump(); });

  m.def("example_algebra", &example_algebra, py::arg("p") = 2);
  m.def("incidence_algebra", &incidence_algebra, py::arg("poset"), py::arg("p") = 2);
  m.def("linear_path_algebra", &linear_path_algebra, py::arg("n"), py::arg("p") = 2);
  m.def("algebra_from_spec", &parse_algebra_spec, py::arg("spec"), py::arg("p") = 2,
        py::arg("opposite") = false);
  m.def("algebra_from_json", [](const std::string& s) { return algebra_from_json(json::parse(s)); });

  m.def("hom_dim", &hom_dim);
  m.def("ext_dim", py::overload_cast<const Algebra&, const Module&, const Module&, std::size_t>(
                       &ext_dim));
  m.def("ext_dim_injective", &ext_dim_injective);
  m.def("syzygy", &syzygy);
  m.def("cosyzygy", &cosyzygy);
  m.def("direct_sum", py::overload_cast<const Module&, const Module&>(&direct_sum));
  m.def("isomorphic",
        [](const Algebra& a, const Module& x, const Module& y) { return isomorphic(a, x, y); });
  m.def("is_indecomposable", [](const Algebra& a, const Module& x) { return is_indecomposable(a, x); });
  m.def("decompose", [](const Algebra& a, const Module& x) { return decompose(a, x); });
  m.def("indecomposables",
        [](const Algebra& a, std::size_t bound) { return indecomposables(a, bound); },
        py::arg("algebra"), py::arg("dim_bound") = 2);
  m.def("describe", &describe);
  m.def("global_dimension", [](const Algebra& a, std::size_t probe) {
    auto g = global_dimension(a, probe);
    return py::make_tuple(g.value, g.exceeded);
  }, py::arg("algebra"), py::arg("probe_bound") = 6);

  py::class_<Catalog>(m, "Catalog")
      .def(py::init([](const Algebra& a, std::size_t bound) { return Catalog(a, bound); }),
           py::arg("algebra"), py::arg("dim_bound") = 2)
      .def("__len__", &Catalog::size)
      .def("module", &Catalog::module, py::return_value_policy::copy)
      .def("name", &Catalog::name)
      .def_property_readonly("names",
                             [](const Catalog& c) {
                               std::vector<std::string> out;
                               for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.name(i));
                               return out;
                             })
      .def("hom_dim", &Catalog::hom_dim)
      .def("ext_dim", &Catalog::ext_dim);

  py::class_<TorsionPair>(m, "TorsionPair")
      .def_property_readonly("tors", [](const TorsionPair& t) { return members(t.tors); })
      .def_property_readonly("free", [](const TorsionPair& t) { return members(t.free); });

  py::class_<TorsionLattice>(m, "TorsionLattice")
      .def_readonly("lattice", &TorsionLattice::lattice)
      .def_readonly("pairs", &TorsionLattice::pairs)
      .def("__len__", [](const TorsionLattice& t) { return t.pairs.size(); });

  m.def("enumerate_torsion_pairs",
        [](const Catalog& c, std::size_t cap, double seconds) {
          EnumerationLimits lim;
          lim.cap = cap;
          lim.seconds = seconds;
          return enumerate_torsion_pairs(c, lim);
        },
        py::arg("catalog"), py::arg("cap") = 2000, py::arg("seconds") = 600.0);
  m.def("torsion_closure", [](const Catalog& c, const std::vector<std::size_t>& s) {
    return members(torsion_closure(c, bitset_of(c.size(), s)));
  });
  m.def("is_torsion_class", [](const Catalog& c, const std::vector<std::size_t>& s) {
    return is_torsion_class(c, bitset_of(c.size(), s));
  });
  m.def("is_omega_n",
        [](const Catalog& c, const TorsionPair& t, std::size_t n, const std::string& route) {
          return is_omega_n(c, t, n, route_of(route));
        },
        py::arg("catalog"), py::arg("pair"), py::arg("n") = 1, py::arg("route") = "ext");
  m.def("is_hereditary", &is_hereditary);
  m.def("is_cohereditary", &is_cohereditary);
  m.def("is_split", &is_split);
  m.def("ext_quiver", &ext_quiver);
  m.def("omega_lattice_via_simples", &omega_lattice_via_simples);
  m.def("verify_theorem_1", &verify_theorem_1);
  m.def("torsion_lattice_to_json", [](const Catalog& c, const TorsionLattice& t) {
    return torsion_lattice_to_json(c, t, annotate(c, t)).dump();
  });
}
