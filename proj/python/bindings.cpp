#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "mcgpres/catalog.hpp"
#include "mcgpres/certificates.hpp"
#include "mcgpres/coset.hpp"
#include "mcgpres/probes.hpp"
#include "mcgpres/quotient.hpp"
#include "mcgpres/tietze.hpp"

namespace py = pybind11;
using namespace mcgpres;

namespace {

PresentationFamily family_or_throw(const std::string& name) {
  auto f = family_from_name(name);
  if (!f || *f == PresentationFamily::Custom)
    throw py::value_error("unknown family '" + name + "'");
  return *f;
}

std::vector<std::string> names(const std::vector<GeneratorSymbol>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.name());
  return out;
}

py::dict abelianization_dict(const Presentation& p, Pivoting piv) {
  const auto a = abelianization(p, piv);
  std::vector<std::string> torsion;
  for (const auto& t : a.torsion) torsion.push_back(t.get_str());
  py::dict d;
  d["free_rank"] = a.free_rank;
  d["torsion"] = torsion;
  d["text"] = format_abelianization(a);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Presentations of mapping class groups of nonorientable surfaces";

  py::register_exception<WordSyntaxError>(m, "WordSyntaxError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<PresentationParseError>(m, "PresentationParseError", PyExc_ValueError);
  py::register_exception<FileParseError>(m, "FileParseError", PyExc_ValueError);

  m.def("reduce_word", [](const std::string& text) { return format_word(parse_word(text)); },
        "Freely reduce a word given in text syntax");
  m.def("invert_word",
        [](const std::string& text) { return format_word(invert(parse_word(text))); });
  m.def("cyclically_reduce", [](const std::string& text) {
    const auto cr = cyclically_reduce(parse_word(text));
    return py::make_tuple(format_word(cr.core), format_word(cr.conjugator));
  });
  m.def("derived_word", [](const std::string& name, int g) {
    return format_word(derived_word(name, g));
  });
  m.def("u_words_by_recursion", [](int g) {
    std::map<int, std::string> out;
    for (const auto& [i, w] : u_words_by_recursion(g)) out[i] = format_word(w);
    return out;
  });

  py::class_<Presentation>(m, "Presentation")
      .def_readonly("g", &Presentation::g)
      .def_readonly("s", &Presentation::s)
      .def_property_readonly("family",
                             [](const Presentation& p) { return std::string(family_name(p.family)); })
      .def_property_readonly("generators",
                             [](const Presentation& p) { return names(p.generators); })
      .def_property_readonly("relations",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relations) out.push_back(r.label());
                               return out;
                             })
      .def("relator",
           [](const Presentation& p, const std::string& label) {
             const auto* r = p.find(label);
             if (!r) throw py::key_error(label);
             return format_word(r->relator());
           })
      .def("emit", &emit_presentation)
      .def("violations", [](const Presentation& p) {
        std::vector<std::string> out;
        for (const auto& v : validate(p)) out.push_back(v.message);
        return out;
      });

  m.def("build_family",
        [](const std::string& family, int g) { return build_family(family_or_throw(family), g); },
        py::arg("family"), py::arg("g"));
  m.def("parse_presentation", [](const std::string& text) { return parse_presentation(text); });
  m.def("read_presentation", &read_presentation_file);

  m.def("abelianization",
        [](const Presentation& p, bool column_first) {
          return abelianization_dict(p, column_first ? Pivoting::ColumnFirst : Pivoting::RowFirst);
        },
        py::arg("presentation"), py::arg("column_first") = false);

  m.def("coset_index",
        [](const Presentation& p, const std::vector<std::string>& subgroup,
           std::size_t max_cosets) -> py::object {
          std::vector<Word> h;
          for (const auto& s : subgroup) h.push_back(parse_word_in(p, s));
          const auto t = todd_coxeter(p, h, max_cosets);
          if (!t.complete()) return py::none();
          return py::int_(t.index());
        },
        py::arg("presentation"), py::arg("subgroup") = std::vector<std::string>{},
        py::arg("max_cosets") = kDefaultMaxCosets,
        "Index of the subgroup, or None when the coset limit is reached");

  m.def("check_witness_file", [](const std::string& path) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& r : check_witness_file(read_witness_file(path)))
      out.emplace_back(r.label, r.check.ok);
    return out;
  });
  m.def("check_script_file", [](const std::string& path) {
    const auto rep = check_script(read_script_file(path));
    py::dict d;
    d["ok"] = rep.ok;
    d["findings"] = rep.findings;
    d["transcript"] = rep.transcript;
    d["generators"] = names(rep.final.generators);
    return d;
  });
  m.def("check_enum_file", [](const std::string& path) {
    const auto rep = check_enum_spec(read_enum_spec(path));
    py::dict d;
    d["ok"] = rep.ok();
    d["complete"] = rep.table.complete();
    d["index"] = rep.table.index();
    return d;
  });

  m.def("compare_families",
        [](const std::string& left, const std::string& right, int g) {
          const auto a = build_family(family_or_throw(left), g);
          const auto b = build_family(family_or_throw(right), g);
          const auto c = compare_presentations(
              a, b, shipped_assignments(g, is_closed_family(a.family), default_fixtures_dir()));
          std::map<std::string, bool> out;
          for (const auto& p : c.probes) out[p.probe] = p.equal;
          return out;
        },
        "Probe name to equality for two catalog families at the same genus");
  m.def("default_fixtures_dir", &default_fixtures_dir);
}
