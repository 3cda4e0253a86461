#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "abcg/abc_group.hpp"
#include "abcg/coset.hpp"
#include "abcg/gadgets.hpp"
#include "abcg/monomial_eq.hpp"
#include "abcg/zlinalg.hpp"

namespace py = pybind11;
using namespace abcg;

namespace {

LaurentVec vec_from_obj(const py::object& obj, int rank) {
  std::vector<LaurentPoly> coords;
  if (py::isinstance<py::str>(obj)) {
    coords.push_back(LaurentPoly::parse(obj.cast<std::string>()));
  } else {
    for (const auto& item : obj.cast<py::sequence>())
      coords.push_back(LaurentPoly::parse(item.cast<std::string>()));
  }
  if (static_cast<int>(coords.size()) != rank)
    throw py::value_error("vector has wrong rank");
  return LaurentVec(std::move(coords));
}

std::vector<std::string> vec_to_strs(const LaurentVec& v) {
  std::vector<std::string> out;
  for (int i = 0; i < v.rank(); ++i) out.push_back(v[i].str());
  return out;
}

GroupElement elem_from_obj(const AbcGroup& grp, const py::object& obj) {
  auto t = obj.cast<py::tuple>();
  return grp.element(vec_from_obj(t[0], grp.presentation().ambient_rank()),
                     t[1].cast<std::int64_t>());
}

py::tuple elem_to_obj(const AbcGroup& grp, const GroupElement& g) {
  return py::make_tuple(vec_to_strs(grp.presentation().reduce(g.a)), g.z);
}

SolveConfig config_from_kwargs(std::int64_t bound,
                               const std::vector<std::pair<int, int>>& probes) {
  SolveConfig cfg;
  cfg.search_bound = bound;
  if (!probes.empty()) cfg.probes = probes;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_abcg, m) {
  m.doc() = "exact computations in finitely generated abelian-by-cyclic groups";

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::string& s) { return LaurentPoly::parse(s); }))
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("shifted", &LaurentPoly::shifted)
      .def("is_zero", &LaurentPoly::is_zero)
      .def("__str__", &LaurentPoly::str)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.str() + "')"; });

  py::class_<ModulePresentation>(m, "Presentation")
      .def(py::init([](int rank, const py::object& relations, int base_step) {
             std::vector<LaurentVec> rels;
             if (!relations.is_none())
               for (const auto& r : relations.cast<py::sequence>())
                 rels.push_back(vec_from_obj(r.cast<py::object>(), rank));
             return ModulePresentation(rank, std::move(rels), base_step);
           }),
           py::arg("ambient_rank") = 1, py::arg("relations") = py::none(),
           py::arg("base_step") = 1)
      .def_property_readonly("ambient_rank", &ModulePresentation::ambient_rank)
      .def_property_readonly("base_step", &ModulePresentation::base_step)
      .def("elem_equal",
           [](const ModulePresentation& p, const py::object& a, const py::object& b) {
             return p.elem_equal(vec_from_obj(a, p.ambient_rank()),
                                 vec_from_obj(b, p.ambient_rank()));
           })
      .def("reduce", [](const ModulePresentation& p, const py::object& a) {
        return vec_to_strs(p.reduce(vec_from_obj(a, p.ambient_rank())));
      });

  m.def(
      "gadget_holds",
      [](const std::string& kind, std::int64_t z1, std::int64_t z2, std::int64_t z3) {
        if (kind == "square") return gadget_holds(GadgetKind::Square, {z1, z2, z3});
        if (kind == "sum") return gadget_holds(GadgetKind::Sum, {z1, z2, z3});
        throw py::value_error("kind must be 'square' or 'sum'");
      },
      py::arg("kind"), py::arg("z1"), py::arg("z2"), py::arg("z3"));

  m.def(
      "solve_monomial",
      [](const ModulePresentation& pres, const py::object& f1, const py::object& f0,
         std::int64_t bound, const std::vector<std::pair<int, int>>& probes) {
        MonomialSolveResult r =
            solve_monomial(pres, vec_from_obj(f1, pres.ambient_rank()),
                           vec_from_obj(f0, pres.ambient_rank()),
                           config_from_kwargs(bound, probes));
        py::dict out;
        out["verdict"] = r.verdict == MonomialSolveResult::Verdict::Found ? "found"
                         : r.verdict == MonomialSolveResult::Verdict::Empty ? "empty"
                                                                            : "unknown";
        if (r.found()) out["z"] = r.z;
        if (r.certificate == MonomialSolveResult::Certificate::Period)
          out["period"] = r.period;
        if (r.certificate == MonomialSolveResult::Certificate::Probe)
          out["probe"] = py::make_tuple(r.probe.first, r.probe.second);
        return out;
      },
      py::arg("presentation"), py::arg("f1"), py::arg("f0"), py::arg("bound") = 64,
      py::arg("probes") = std::vector<std::pair<int, int>>{});

  m.def(
      "subgroup_structure",
      [](const ModulePresentation& pres, const py::list& gens) {
        AbcGroup grp(pres);
        std::vector<GroupElement> gg;
        for (const auto& g : gens) gg.push_back(elem_from_obj(grp, g.cast<py::object>()));
        SubgroupStructure s = subgroup_structure(grp, gg);
        py::dict out;
        out["all_in_a"] = s.all_in_a;
        out["d"] = s.d;
        py::list sg;
        for (const auto& v : s.s_gens) sg.append(vec_to_strs(v));
        out["S"] = sg;
        if (s.pivot) out["pivot"] = elem_to_obj(grp, *s.pivot);
        return out;
      },
      py::arg("presentation"), py::arg("generators"));

  m.def(
      "subgroup_member",
      [](const ModulePresentation& pres, const py::list& gens, const py::object& g) {
        AbcGroup grp(pres);
        std::vector<GroupElement> gg;
        for (const auto& e : gens) gg.push_back(elem_from_obj(grp, e.cast<py::object>()));
        return subgroup_membership(grp, elem_from_obj(grp, g),
                                   subgroup_structure(grp, gg));
      },
      py::arg("presentation"), py::arg("generators"), py::arg("element"));

  m.def(
      "coset_intersect",
      [](const ModulePresentation& pres, const py::list& g_gens, const py::list& h_gens,
         const py::object& h, std::int64_t bound) {
        AbcGroup grp(pres);
        std::vector<GroupElement> gg, hh;
        for (const auto& e : g_gens) gg.push_back(elem_from_obj(grp, e.cast<py::object>()));
        for (const auto& e : h_gens) hh.push_back(elem_from_obj(grp, e.cast<py::object>()));
        SolveConfig cfg;
        cfg.search_bound = bound;
        CosetResult r = coset_intersect(grp, gg, hh, elem_from_obj(grp, h), cfg);
        py::dict out;
        out["verdict"] = r.verdict == CosetResult::Verdict::NonEmpty ? "nonempty"
                         : r.verdict == CosetResult::Verdict::Empty  ? "empty"
                                                                     : "unknown";
        if (r.witness) out["witness"] = elem_to_obj(grp, *r.witness);
        out["certificate"] = r.certificate;
        return out;
      },
      py::arg("presentation"), py::arg("G"), py::arg("H"), py::arg("h"),
      py::arg("bound") = 64);

  m.def(
      "verify_coset_witness",
      [](const ModulePresentation& pres, const py::list& g_gens, const py::list& h_gens,
         const py::object& h, const py::object& w) {
        AbcGroup grp(pres);
        std::vector<GroupElement> gg, hh;
        for (const auto& e : g_gens) gg.push_back(elem_from_obj(grp, e.cast<py::object>()));
        for (const auto& e : h_gens) hh.push_back(elem_from_obj(grp, e.cast<py::object>()));
        return verify_coset_witness(grp, gg, hh, elem_from_obj(grp, h),
                                    elem_from_obj(grp, w));
      },
      py::arg("presentation"), py::arg("G"), py::arg("H"), py::arg("h"), py::arg("w"));

  m.def("hermite_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    HnfResult res = hermite_normal_form(IntMatrix::from_rows(conv));
    auto to_py = [](const IntMatrix& m) {
      py::list out;
      for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j)
          row.append(py::int_(py::str(m(i, j).str())));
        out.append(row);
      }
      return out;
    };
    return py::make_tuple(to_py(res.h), to_py(res.u));
  });

  m.def(
      "evaluate_word",
      [](const ModulePresentation& pres, const py::list& letters, const py::dict& asg) {
        AbcGroup grp(pres);
        Word w;
        for (const auto& l : letters) {
          auto t = l.cast<py::tuple>();
          const std::string kind = t[0].cast<std::string>();
          if (kind == "var")
            w.append(Word::var(t[1].cast<std::string>()));
          else if (kind == "inv")
            w.append(Word::var(t[1].cast<std::string>()).inverse());
          else if (kind == "const")
            w.append(Word::constant(elem_from_obj(grp, t[1].cast<py::object>())));
          else
            throw py::value_error("letter kind must be var, inv or const");
        }
        std::map<std::string, GroupElement> assignment;
        for (const auto& [k, v] : asg)
          assignment[k.cast<std::string>()] =
              elem_from_obj(grp, v.cast<py::object>());
        return elem_to_obj(grp, evaluate_word(grp, w, assignment));
      },
      py::arg("presentation"), py::arg("word"), py::arg("assignment"));
}
